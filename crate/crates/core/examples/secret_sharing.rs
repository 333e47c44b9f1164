//! Sharing one bit with the sign parts of a dual witness.
//!
//!     cargo run --example secret_sharing

use adeg::exactlp::dual_witness;
use adeg::fncore::{make_basic, Gate};
use adeg::rational;
use adeg::shareapp::{advantage, monte_carlo, near_miss_witness, reconstruct, scheme_from_witness, secrecy_audit, split};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_basic(Gate::Or, 3)?;
    let (corr, psi) = dual_witness(&f, 3)?;
    let scheme = scheme_from_witness("or3", "lp-d3", &psi)?;
    println!("OR_3 scheme: correlation {}, advantage {}", rational::fmt(&corr), rational::fmt(&advantage(&scheme, &f)));
    for d in 1..=4 {
        println!("  secrecy against {} shares: {}", d - 1, secrecy_audit(&scheme, d).pass);
    }
    for (secret, seed) in [(1, 1), (-1, 2), (-1, 3)] {
        let b = split(secret, &scheme, seed);
        println!("  secret {secret:+} seed {seed}: shares {} -> {}", b.shares, reconstruct(&b, &f)?);
    }
    let trials = 100_000;
    let hits = monte_carlo(&scheme, &f, trials, 42);
    println!("  Monte Carlo: {hits}/{trials} recovered");

    let near = scheme_from_witness("or3", "near-miss", &near_miss_witness(3, 3).unwrap())?;
    println!("near-miss witness passes a 3-audit: {}", secrecy_audit(&near, 3).pass);
    Ok(())
}
