//! Certificate complexity, the f* lift of a DNF, and MAJ amplification.
//!
//!     cargo run --example certificates

use adeg::certapp::{fstar_ledger, maj_amplification};
use adeg::fncore::{certificate_complexity, make_basic, Dnf, Gate};
use adeg::rational::frac;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, gate) in [("OR", Gate::Or), ("MAJ", Gate::Maj), ("PARITY", Gate::Parity)] {
        let f = make_basic(gate, 3)?;
        let c = certificate_complexity(&f, 16)?;
        println!("{name}_3: C = {}, C_-1 = {}, C_+1 = {}", c.c, c.c_minus, c.c_plus);
    }

    let dnf = Dnf::monotone(3, &[&[0, 1], &[2]])?;
    let (ledger, base, lifted) = fstar_ledger(&dnf, &frac(1, 3))?;
    println!("\n(x1 and x2) or x3: adeg(f) = {}, adeg(f*) = {}", base.degree, lifted.degree);
    println!("  all certified: {}", ledger.all_certified());

    let or2 = make_basic(Gate::Or, 2)?;
    let (ledger, base, amp) = maj_amplification(&or2, 3)?;
    println!("\nMAJ_3 o OR_2: adeg_1/3(OR_2) = {}, adeg at eps {} = {}", base.degree, amp.target, amp.degree);
    println!("  all certified: {}", ledger.all_certified());
    Ok(())
}
