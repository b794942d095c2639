//! Sorting generative autoequivalences into graded Morita classes.

use weylgraded::{canonical_admissible, parse_expression, same_morita_class};

fn main() -> weylgraded::Result<()> {
    for text in ["S^2 * i{0,2}", "S * i{0}", "S^-2 * i{0}", "S^3 * i{-4,1,7}", "S^4 * i{1,2,5,9}"] {
        let f = parse_expression(text)?;
        let c = canonical_admissible(&f)?;
        println!("{text}");
        println!("  admissible {}  necklace {}", c.pair, c.necklace());
        println!("  conjugator {}  verified {}", c.conjugator, c.verifies(&f));
    }

    let a = parse_expression("S^2 * i{0}")?;
    let b = parse_expression("S^2 * i{1}")?;
    let c = parse_expression("S^2")?;
    println!("\n{a} ~ {b}: {}", same_morita_class(&a, &b)?);
    println!("{a} ~ {c}: {}", same_morita_class(&a, &c)?);

    match canonical_admissible(&parse_expression("w")?) {
        Err(e) => println!("w: {e}"),
        Ok(c) => println!("w: {}", c.pair),
    }
    Ok(())
}
