//! Degree ladders for a few gates, with the LP dual witness that certifies
//! each lower bound.
//!
//!     cargo run --example approximate_degree

use adeg::exactlp::degree::ladder_string;
use adeg::exactlp::{adeg, dual_witness, LpCertificate};
use adeg::fncore::{make_basic, Gate};
use adeg::rational::{self, frac};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let third = frac(1, 3);
    for (name, gate) in [("OR", Gate::Or), ("AND", Gate::And), ("MAJ", Gate::Maj), ("PARITY", Gate::Parity)] {
        for n in 1..=4 {
            let f = make_basic(gate, n)?;
            let rep = adeg(&f, &third)?;
            println!("{name}_{n}: adeg_1/3 = {}   ladder {}", rep.degree, ladder_string(&rep));
        }
    }

    let or2 = make_basic(Gate::Or, 2)?;
    let cert = LpCertificate::compute(&or2, 1)?;
    println!("\nOR_2 at degree 1");
    println!("  primal error      {}", rational::fmt(&cert.primal_eps));
    println!("  dual correlation  {}", rational::fmt(&cert.dual_correlation));
    println!("  best polynomial   {:?}", cert.polynomial.terms().map(|(m, c)| (m, rational::fmt(c))).collect::<Vec<_>>());
    println!("  verifies          {}", cert.verify(&or2));

    let (corr, psi) = dual_witness(&or2, 2)?;
    println!("  witness (phd {}):  correlation {}", psi.pure_high_degree(), rational::fmt(&corr));
    for (x, v) in psi.iter() {
        println!("    psi({x:02b}) = {}", rational::fmt(v));
    }
    Ok(())
}
