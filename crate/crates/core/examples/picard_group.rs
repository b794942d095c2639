//! The group of graded autoequivalences: normal forms `S^b * i{J} * w`, its
//! action on simples and on rank-one projectives.

use weylgraded::picard::coverage_witness;
use weylgraded::{parse_expression, AdmissiblePair, DSet, FinSet, PicElement, SimpleLabel};

fn main() -> weylgraded::Result<()> {
    let f = parse_expression("S * i{0}")?;
    let w = PicElement::omega();
    println!("F = {f}, F^2 = {}, F^-1 = {}", f.pow(2), f.inverse());
    println!("w*w = {}", w.compose(&w));
    println!("i{{0}} * S = {}", parse_expression("i{0} * S")?);

    let odd = parse_expression("S^3 * i{1,4} * w")?;
    println!("odd element {odd}: square {}, fourth power {}", odd.pow(2), odd.pow(4));
    println!("sign and rank of {odd}: {:?}", odd.sign_rank());

    for s in ["X(0)", "Y(2)", "M(1/2)"] {
        let label: SimpleLabel = s.parse()?;
        println!("{f} maps {label} to {}; w maps it to {}", f.act_on_simple(&label), w.act_on_simple(&label));
    }

    // F^n A is i{0,n}A
    for n in 1..=4 {
        println!("D(F^{n} A) = {}", f.pow(n).act_on_dset(&DSet::free()));
    }

    let pair = AdmissiblePair::new(FinSet::from([0]), 2)?;
    println!("\nsets reached by powers of S^2 i{{0}}:");
    for (j, set) in coverage_witness(&pair, 3)? {
        println!("  j = {j}: {set}");
    }
    Ok(())
}
