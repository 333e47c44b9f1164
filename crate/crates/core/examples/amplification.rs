//! The full witness pipeline at desk scale: phi, the AND amplifier, the OR
//! witness, their composition zeta and the corrected zeta-hat.
//!
//!     cargo run --example amplification

use adeg::dualcraft::pipeline::{run_desk, ParamOverrides};
use adeg::dualcraft::AmplificationParams;
use adeg::fncore::{make_basic, Gate};
use adeg::rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("asymptotic schedule:");
    for n in [64, 1000, 1 << 20] {
        let p = AmplificationParams::schedule(n, 1)?;
        println!("  n={n:>8}  k={} D={} M={} R={} N={}", p.k, p.big_d, p.big_m, p.r, p.n_cap);
    }

    let f = make_basic(Gate::Or, 2)?;
    for big_m in 1..=2 {
        let run = run_desk(&f, &ParamOverrides { big_m: Some(big_m), ..Default::default() })?;
        println!("\ndesk run for OR_2, M = {big_m}: {:?}", run.params);
        println!("  zeta support {}, mass above N {}", run.zeta.support_size(), rational::fmt(&run.mass_outside));
        for p in run.ledger.iter() {
            println!("  {:?}  {}", p.status, p.name);
        }
    }
    Ok(())
}
