//! The univariate witness for OR on weights up to k, and its certified
//! properties.
//!
//!     cargo run --example omega_witness -- 36

use adeg::dualcraft::{omega, omega_properties, DEFAULT_C};
use adeg::rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(25);
    let o = omega(k, DEFAULT_C)?;
    println!("k = {k}, support T = {:?}", o.support_set);
    for &t in &o.support_set {
        println!("  omega({t:>3}) = {}", rational::fmt(&o.normalized.get(t)));
    }
    for p in omega_properties(&o).iter() {
        let sides = match (&p.lhs, &p.relation, &p.rhs) {
            (Some(l), Some(r), Some(h)) => format!("{l} {r} {h}"),
            _ => String::new(),
        };
        println!("{:?}  {}  {sides}", p.status, p.name);
    }
    Ok(())
}
