//! Counting and listing binary necklaces, which index the graded Morita
//! classes of rings equivalent to the Weyl algebra.

use weylgraded::{necklace_canonical, necklace_count, necklace_enumerate, AdmissiblePair, FinSet};

fn main() -> weylgraded::Result<()> {
    for n in 1..=8 {
        println!("n = {n}: {} classes", necklace_count(n)?);
    }

    println!();
    for class in necklace_enumerate(4)? {
        println!("{class}");
    }

    // rotations are identified, reflections are not
    let p = AdmissiblePair::new(FinSet::from([0, 1, 3]), 5)?;
    let q = AdmissiblePair::new(FinSet::from([0, 2, 3]), 5)?;
    println!();
    println!("{p} -> {}", necklace_canonical(&p));
    println!("{q} -> {}", necklace_canonical(&q));

    // the boundary operator and its inverse on the image
    let k = FinSet::from([1, 2, 3]);
    let d = k.boundary(1)?;
    println!("\nboundary of {k} with n = 1: {d}, preimage {}", d.inverse_boundary(1)?);
    Ok(())
}
