//! The rings S(J, n): their generalized Weyl algebra presentations and graded
//! pieces, computed twice.

use weylgraded::gwa::{oracle_pieces, ring_pieces};
use weylgraded::{present, verify_gwa_embedding, verify_ring_closure, FinSet};

fn main() -> weylgraded::Result<()> {
    let cases = [(FinSet::new(), 2), (FinSet::from([0]), 1), (FinSet::from([0]), 2), (FinSet::from([0, 2]), 3)];
    for (set, n) in cases {
        println!("{}", present(&set, n)?);
        let closed = ring_pieces(&set, n, -2, 2)?;
        print!("{closed}");
        let oracle = oracle_pieces(&set, n, -2, 2)?;
        println!("lattice construction agrees: {}", oracle == closed);
        println!(
            "closed under products: {}, GWA relations hold: {}\n",
            verify_ring_closure(&set, n, 3)?,
            verify_gwa_embedding(&set, n)?
        );
    }
    Ok(())
}
