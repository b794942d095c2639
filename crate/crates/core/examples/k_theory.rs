//! Graded K_0: sums of rank-one projectives up to isomorphism.

use weylgraded::k_theory::single_complement_search;
use weylgraded::{iso_test, normalize_sum, stably_free_witness, theta_map, FinSet, K0Class, ProjectiveSum};

fn main() -> weylgraded::Result<()> {
    let p: ProjectiveSum = "i{1,3}A + i{0,1,2}A".parse()?;
    println!("{p}  =  {}", normalize_sum(&p));

    let lhs: ProjectiveSum = "i{1,3}A + A<3> + A<1>".parse()?;
    let rhs: ProjectiveSum = "A<4> + A<2> + A".parse()?;
    println!("{lhs}  ≅  {rhs}: {}", iso_test(&lhs, &rhs));

    let set = FinSet::from([1, 3]);
    let (adds, result) = stably_free_witness(&set)?;
    println!("witness for {set}: add {adds:?}, get {result:?}");
    println!("one free summand enough within 8: {:?}", single_complement_search(&set, 8));

    let c = &K0Class::of_set(&FinSet::from([0, 3])) - &K0Class::basis(0);
    println!("\n[i{{0,3}}A] - [A] = {c}");
    println!("theta = {}", theta_map(&c));
    println!("theta of twice that = {}", theta_map(&c.scale(2)));
    Ok(())
}
