//! Dual block composition and its three laws on small witnesses.
//!
//!     cargo run --example dual_composition

use adeg::dualcraft::dual_block_compose;
use adeg::exactlp::{dual_witness, one_sided_dual_witness};
use adeg::fncore::{block_compose, make_basic, Gate};
use adeg::rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let or2 = make_basic(Gate::Or, 2)?;
    let and2 = make_basic(Gate::And, 2)?;
    let (_, outer) = dual_witness(&and2, 2)?;
    let (_, inner) = one_sided_dual_witness(&or2, 2)?;

    let z = dual_block_compose(&outer, &inner)?;
    let composed = block_compose(&and2, &or2)?;
    println!("AND_2 o OR_2 witness on {} bits, support {}", z.arity(), z.support_size());
    println!("  norm              {}", rational::fmt(&z.l1()));
    println!(
        "  pure high degree  {} (outer {} x inner {})",
        z.pure_high_degree(),
        outer.pure_high_degree(),
        inner.pure_high_degree()
    );
    println!("  correlation       {}", rational::fmt(&z.correlation(&composed).unwrap()));

    let left = dual_block_compose(&dual_block_compose(&outer, &inner)?, &inner)?;
    let right = dual_block_compose(&outer, &dual_block_compose(&inner, &inner)?)?;
    println!("  associativity     {}", left == right);
    Ok(())
}
