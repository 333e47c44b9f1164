//! The chain from a block function through its promise and property
//! versions to the DNF lift, certified on OR_2 with two range items.
//!
//!     cargo run --example reduction_chain

use adeg::fncore::{make_basic, Gate};
use adeg::rational::frac;
use adeg::reduction::{reduction_ledger, ChainConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_basic(Gate::Or, 2)?;
    let mut cfg = ChainConfig::new(2, frac(1, 3));
    cfg.width = Some(2);
    let (ledger, summary) = reduction_ledger(&f, &cfg)?;
    println!("{}", serde_json::to_string_pretty(&summary)?);
    for p in ledger.iter() {
        let sides = match (&p.lhs, &p.relation, &p.rhs) {
            (Some(l), Some(r), Some(h)) => format!("{l} {r} {h}"),
            _ => String::new(),
        };
        println!("{:?}  {}  {sides}", p.status, p.name);
    }
    Ok(())
}
