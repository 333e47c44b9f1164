//! Overweight mass of a factored composition by dynamic programming,
//! checked against full enumeration.
//!
//!     cargo run --example mass_dp

use adeg::dualcraft::amplifier_psi;
use adeg::dualcraft::pipeline::{inner_profile, FactoredZeta};
use adeg::rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("  R  N  k  dp            brute");
    for r in 1..=3 {
        for n in 1..=4usize {
            if r * n > 12 {
                continue;
            }
            for k in 1..=n {
                let z = FactoredZeta::new(amplifier_psi(r)?, inner_profile(k)?, n)?;
                let dp = z.mass_outside(n);
                let brute = z.mass_outside_brute(n)?;
                println!("{r:>3}{n:>3}{k:>3}  {:<13} {}", rational::fmt(&dp), rational::fmt(&brute));
                assert_eq!(dp, brute);
            }
        }
    }
    Ok(())
}
