//! Correcting a witness so that its support stays below a weight cap.
//!
//!     cargo run --example overweight_correction

use adeg::dualcraft::correction::correction_properties;
use adeg::dualcraft::{correction_nu, finalize_zetahat, rs_phi, rs_phi_properties};
use adeg::exactlp::dual_witness;
use adeg::fncore::{make_basic, Gate};
use adeg::rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = rs_phi(0b111, 1, 4)?;
    println!("phi_y for y = 1110, D = 1:");
    for (x, v) in phi.iter() {
        println!("  {x:04b}  {}", rational::fmt(v));
    }
    println!("  all properties certified: {}", rs_phi_properties(0b111, 1, &phi).all_certified());

    let (_, zeta) = dual_witness(&make_basic(Gate::Parity, 4)?, 2)?;
    let (cap, degree) = (3, 2);
    let nu = correction_nu(&zeta, cap, degree)?;
    let hat = finalize_zetahat(&zeta, &nu)?;
    println!("\nparity witness on 4 bits, weight cap {cap}, degree {degree}");
    println!("  mass above cap    {}", rational::fmt(&zeta.mass_above(cap)));
    println!("  |nu|              {}", rational::fmt(&nu.l1()));
    println!("  zeta-hat support  weight <= {:?}", hat.max_support_weight());
    println!("  zeta-hat phd      {}", hat.pure_high_degree());
    for p in correction_properties(&zeta, &nu, cap, degree).iter() {
        println!("  {:?}  {}", p.status, p.name);
    }
    Ok(())
}
