//! Non-crossing partition to 312-avoiding permutation, with every intermediate stage.
use qcatalan::bijections::{nc_from_312, nc_to_312_trace};
use qcatalan::objects::parse_nc;
use qcatalan::statistics::{maj, nc_maj, DescentConvention};

fn main() {
    let pi = parse_nc("158/24/3/67").unwrap();
    let (sigma, t) = nc_to_312_trace(&pi).unwrap();
    println!("pi {pi}");
    println!("minima {:?} maxima {:?}", t.minima, t.maxima);
    println!("peaks {:?} valleys {:?}", t.peaks, t.valleys);
    println!("path {} lehmer {:?} mu {}", t.path, t.lehmer, t.mu);
    let std = DescentConvention::Standard;
    let (a, b) = (maj(sigma.values(), std), maj(sigma.inverse().values(), std));
    println!("sigma {sigma}: {} = {a} + {b}", nc_maj(&pi));
    assert_eq!(nc_from_312(&sigma).unwrap(), pi);
}
