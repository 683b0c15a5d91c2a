use crate::error::{Error, Result};
use crate::objects::{BinaryWord, RDyckPath, SymmetricPath};

/// Dyck path of size n to symmetric Dyck path of size n-1: drop the first 0 and the
/// last 1, then turn each `10` into a half-arch `0` and copy each prime factor.
pub fn psi(p: &RDyckPath) -> Result<SymmetricPath> {
    if p.r() != 1 {
        return Err(Error::Domain("Ψ takes an ordinary Dyck path".into()));
    }
    let l = p.letters();
    if l.is_empty() {
        return Err(Error::Domain("Ψ needs a path of size at least 1".into()));
    }
    let inner = &l[1..l.len() - 1];
    let mut out = Vec::with_capacity(inner.len());
    let mut i = 0;
    while i < inner.len() {
        if inner[i] == 1 {
            if inner.get(i + 1) != Some(&0) {
                return Err(Error::Internal(format!("unexpected factor in {p}")));
            }
            out.push(0);
            i += 2;
        } else {
            let mut depth = 0i64;
            loop {
                depth += if inner[i] == 0 { 1 } else { -1 };
                out.push(inner[i]);
                i += 1;
                if depth == 0 {
                    break;
                }
            }
        }
    }
    SymmetricPath::new(BinaryWord::from_vec_unchecked(out))
}

/// Replace each half-arch by `10`, keep the arches, and wrap in `0 ... 1`.
pub fn psi_inv(s: &SymmetricPath) -> Result<RDyckPath> {
    let halves = s.half_arches();
    let mut w = vec![0];
    for (i, &b) in s.letters().iter().enumerate() {
        if halves.contains(&(i + 1)) {
            w.extend([1, 0]);
        } else {
            w.push(b);
        }
    }
    w.push(1);
    RDyckPath::new(BinaryWord::from_vec_unchecked(w), 1)
}
