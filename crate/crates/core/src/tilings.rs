//! Cover-inclusive Dyck tilings of the staircase region and their link to permutations.
//!
//! Cells are unit diamonds with centers `(x, y)`, `x + y` odd, `x >= 0`, `y >= 1`,
//! `x + y <= 2n - 1`. The bottom zigzag `(01)^n` has its k-th peak at `x = 2k - 1`,
//! and the anchor box of label i is the cell `(0, 2(n - i) + 1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::Permutation;

pub type Cell = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TileKind {
    Trivial,
    Zigzag,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tile {
    pub label: usize,
    pub kind: TileKind,
    pub cells: Vec<Cell>,
}

impl Tile {
    /// `(#cells + 1) / 2`.
    pub fn length(&self) -> usize {
        self.cells.len().div_ceil(2)
    }

    /// Size of the Dyck path traced by the tile: 0 for a single cell.
    pub fn dyck_size(&self) -> usize {
        self.length() - 1
    }

    pub fn leftmost(&self) -> Cell {
        self.cells[0]
    }

    /// `l + x + (y - 1) / 2` at the leftmost cell; trivial tiles have none.
    pub fn maj(&self) -> usize {
        match self.kind {
            TileKind::Trivial => 0,
            TileKind::Zigzag => {
                let (x, y) = self.leftmost();
                self.length() + x as usize + (y as usize - 1) / 2
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckTiling {
    pub n: usize,
    pub tiles: Vec<Tile>,
}

fn in_region(n: usize, (x, y): Cell) -> bool {
    x >= 0 && y >= 1 && x + y <= 2 * n as i64 - 1 && (x + y) % 2 == 1
}

pub fn anchor(n: usize, label: usize) -> Cell {
    (0, 2 * (n - label) as i64 + 1)
}

fn bug(w: &Permutation, what: &str) -> Error {
    Error::Internal(format!("tiling of {w}: {what}"))
}

/// Trajectories are laid for labels n, ..., 1. Label i, whose peak is the q-th from the
/// left with q = n + 1 - pos(i), takes the lowest free cell in each column 0..=2q-2;
/// rising steps of that strip form zigzag tiles and the remaining cells trivial tiles.
pub fn build_tiling(w: &Permutation) -> Result<DyckTiling> {
    let n = w.n();
    let mut floor: Vec<i64> = (0..2 * n as i64)
        .map(|x| if x % 2 == 0 { 1 } else { 2 })
        .collect();
    let mut tiles = Vec::new();
    for i in (1..=n).rev() {
        let q = n + 1 - w.pos(i);
        let last = 2 * q - 2;
        let strip: Vec<Cell> = (0..=last).map(|x| (x as i64, floor[x])).collect();
        if strip.iter().any(|&c| !in_region(n, c)) {
            return Err(bug(w, "trajectory leaves the region"));
        }
        if strip.windows(2).any(|p| (p[0].1 - p[1].1).abs() != 1) {
            return Err(bug(w, "trajectory is not connected"));
        }
        let yl = strip[last].1;
        if yl != 1 && floor[last + 1] < yl {
            return Err(bug(w, "trajectory does not land on an up step"));
        }
        let mut k = 0;
        while k < strip.len() {
            if k + 1 < strip.len() && strip[k + 1].1 == strip[k].1 + 1 {
                let base = strip[k].1;
                let mut cells = vec![strip[k]];
                while k + 1 < strip.len() && strip[k + 1].1 == base + 1 {
                    if strip.get(k + 2).map(|c| c.1) != Some(base) {
                        return Err(bug(w, "zigzag tile does not return to its base"));
                    }
                    cells.extend([strip[k + 1], strip[k + 2]]);
                    k += 2;
                }
                tiles.push(Tile {
                    label: i,
                    kind: TileKind::Zigzag,
                    cells,
                });
            } else {
                tiles.push(Tile {
                    label: i,
                    kind: TileKind::Trivial,
                    cells: vec![strip[k]],
                });
            }
            k += 1;
        }
        for x in 0..=last {
            floor[x] += 2;
        }
    }
    let t = DyckTiling { n, tiles };
    let filled: usize = t.tiles.iter().map(|t| t.cells.len()).sum();
    if filled != n * n {
        return Err(bug(w, "region is not filled"));
    }
    Ok(t)
}

impl DyckTiling {
    fn owners(&self) -> Result<HashMap<Cell, usize>> {
        let mut owner = HashMap::new();
        for (k, t) in self.tiles.iter().enumerate() {
            for &c in &t.cells {
                if !in_region(self.n, c) {
                    return Err(Error::InvalidObject(format!(
                        "cell {c:?} lies outside the region"
                    )));
                }
                if owner.insert(c, k).is_some() {
                    return Err(Error::InvalidObject(format!("cell {c:?} is covered twice")));
                }
            }
        }
        Ok(owner)
    }

    /// Disjoint tiles filling the region, correctly shaped, with the anchor boxes at tile starts.
    pub fn validate(&self) -> Result<()> {
        let owner = self.owners()?;
        if owner.len() != self.n * self.n {
            return Err(Error::InvalidObject("tiles do not fill the region".into()));
        }
        for t in &self.tiles {
            let (x0, y0) = t.leftmost();
            let shaped = t.cells.len() % 2 == 1
                && t.cells
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == (x0 + k as i64, y0 + (k % 2) as i64));
            let kind_ok = (t.kind == TileKind::Trivial) == (t.cells.len() == 1);
            if !shaped || !kind_ok {
                return Err(Error::InvalidObject(format!(
                    "tile {:?} is not a zigzag ribbon",
                    t.cells
                )));
            }
        }
        let starts: HashMap<Cell, usize> =
            self.tiles.iter().map(|t| (t.leftmost(), t.label)).collect();
        for i in 1..=self.n {
            if starts.get(&anchor(self.n, i)) != Some(&i) {
                return Err(Error::InvalidObject(format!(
                    "anchor box of {i} does not start a tile labelled {i}"
                )));
            }
        }
        Ok(())
    }

    /// Each tile moved down by 2 lies entirely below the bottom boundary or inside one other tile.
    pub fn is_cover_inclusive(&self) -> bool {
        let Ok(owner) = self.owners() else {
            return false;
        };
        self.tiles.iter().enumerate().all(|(k, t)| {
            let shifted: Vec<Cell> = t.cells.iter().map(|&(x, y)| (x, y - 2)).collect();
            if shifted.iter().all(|c| c.1 < 1) {
                return true;
            }
            let mut hosts = shifted.iter().map(|c| owner.get(c).copied());
            let first = hosts.next().flatten();
            first.is_some_and(|h| h != k) && hosts.all(|h| h == first)
        })
    }

    /// Follows every trajectory from its anchor box to its peak and reads the labels
    /// at the peaks from right to left.
    pub fn read_permutation(&self) -> Result<Permutation> {
        let n = self.n;
        let starts: HashMap<Cell, usize> = self
            .tiles
            .iter()
            .enumerate()
            .map(|(k, t)| (t.leftmost(), k))
            .collect();
        let mut w = vec![0; n];
        for i in 1..=n {
            let mut k = *starts
                .get(&anchor(n, i))
                .ok_or_else(|| Error::InvalidObject(format!("no tile at the anchor box of {i}")))?;
            let mut steps = 0;
            let (x, _) = loop {
                let (x, y) = *self.tiles[k].cells.last().expect("tiles are non-empty");
                match starts.get(&(x + 1, y - 1)) {
                    Some(&next) if steps <= self.tiles.len() => {
                        k = next;
                        steps += 1;
                    }
                    Some(_) => return Err(Error::InvalidObject("trajectory loops".into())),
                    None => break (x, y),
                }
            };
            if x % 2 != 0 {
                return Err(Error::InvalidObject(format!(
                    "trajectory {i} does not end at a peak"
                )));
            }
            let peak = (x / 2 + 1) as usize;
            if peak > n || w[n - peak] != 0 {
                return Err(Error::InvalidObject(format!(
                    "trajectory {i} lands on an occupied peak"
                )));
            }
            w[n - peak] = i;
        }
        Permutation::new(w)
    }

    pub fn zigzags(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(|t| t.kind == TileKind::Zigzag)
    }

    /// Zigzag tiles per trajectory label.
    pub fn zigzag_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for t in self.zigzags() {
            *m.entry(t.label).or_insert(0) += 1;
        }
        m
    }
}

pub fn tiling_maj(t: &DyckTiling) -> usize {
    t.tiles.iter().map(Tile::maj).sum()
}

pub fn tiling_wtprime(t: &DyckTiling) -> usize {
    t.tiles.iter().map(Tile::dyck_size).sum()
}

/// `i + 1 - pos(i) + 2(n - i)`, or 0 when `pos(i) = i + #{j > i left of i}`.
pub fn zigzag_maj_formula(w: &Permutation, i: usize) -> usize {
    let n = w.n();
    let pos = w.pos(i);
    let larger_left = w.values()[..pos - 1].iter().filter(|&&j| j > i).count();
    if pos == i + larger_left {
        0
    } else {
        i + 1 + 2 * (n - i) - pos
    }
}

fn label_char(i: usize) -> char {
    std::char::from_digit(i as u32, 36).map_or('?', |c| c)
}

/// Text picture: one character per diamond cell, top row first. Trivial cells show their
/// trajectory label, zigzag tiles a capital letter; the left margin carries the anchor labels.
pub fn render_tiling(t: &DyckTiling) -> String {
    let n = t.n as i64;
    let mut glyph: HashMap<Cell, char> = HashMap::new();
    let mut legend = Vec::new();
    let mut z = 0u8;
    for tile in &t.tiles {
        match tile.kind {
            TileKind::Trivial => {
                glyph.insert(tile.cells[0], label_char(tile.label));
            }
            TileKind::Zigzag => {
                let c = char::from(b'A' + z % 26);
                z += 1;
                for &cell in &tile.cells {
                    glyph.insert(cell, c);
                }
                let (x, y) = tile.leftmost();
                legend.push(format!(
                    "{c}: label {} length {} leftmost ({x},{y}) maj {}",
                    tile.label,
                    tile.length(),
                    tile.maj()
                ));
            }
        }
    }
    let mut out = String::new();
    for y in (1..2 * n).rev() {
        let label = if y % 2 == 1 {
            Some(n - (y - 1) / 2)
        } else {
            None
        };
        match label {
            Some(i) => {
                let _ = write!(out, "{:>2} ", i);
            }
            None => out.push_str("   "),
        }
        let mut row = String::new();
        for x in 0..2 * n - 1 {
            row.push(*glyph.get(&(x, y)).unwrap_or(&' '));
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out.push_str("   ");
    for k in 1..=n {
        out.push_str(if k == 1 { "^" } else { " ^" });
    }
    out.push('\n');
    for line in legend {
        out.push_str(&line);
        out.push('\n');
    }
    let _ = writeln!(out, "maj {}", tiling_maj(t));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::enumerate_permutations;

    fn build(s: &str) -> DyckTiling {
        build_tiling(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn figure_three() {
        let t = build("24135");
        let z: Vec<(usize, Cell, usize)> = t
            .zigzags()
            .map(|t| (t.length(), t.leftmost(), t.maj()))
            .collect();
        assert_eq!(z, [(3, (2, 1), 5), (2, (4, 3), 7)]);
        assert_eq!(tiling_maj(&t), 12);
        assert_eq!(tiling_wtprime(&t), 3);
        assert_eq!(t.read_permutation().unwrap().to_string(), "24135");
        assert!(t.is_cover_inclusive());
        t.validate().unwrap();
    }

    #[test]
    fn identity_and_reversal() {
        let t = build("1234");
        assert_eq!(t.zigzags().count(), 0);
        assert_eq!(tiling_maj(&t), 0);
        assert_eq!(t.read_permutation().unwrap(), Permutation::identity(4));
        let t = build("4321");
        let majs: Vec<usize> = t.zigzags().map(Tile::maj).collect();
        assert_eq!(majs, [4, 4, 4]);
        assert_eq!(tiling_wtprime(&t), 6);
        assert_eq!(tiling_maj(&build("4123")), 4);
    }

    #[test]
    fn several_zigzags_outside_231_avoiders() {
        let t = build("3142");
        assert!(t.zigzag_counts().values().any(|&c| c > 1));
        assert!(t.is_cover_inclusive());
        assert_eq!(t.read_permutation().unwrap().to_string(), "3142");
    }

    #[test]
    fn round_trip_size_four() {
        for w in enumerate_permutations(4, None) {
            let t = build_tiling(&w).unwrap();
            t.validate().unwrap();
            assert_eq!(t.read_permutation().unwrap(), w);
        }
    }

    #[test]
    fn render_is_stable() {
        let t = build("1");
        assert_eq!(render_tiling(&t), " 1 1\n   ^\nmaj 0\n");
        let r = render_tiling(&build("24135"));
        assert_eq!(r, render_tiling(&build("24135")));
        assert!(r.contains("length 3 leftmost (2,1) maj 5"));
        assert!(r.contains("length 2 leftmost (4,3) maj 7"));
    }
}
