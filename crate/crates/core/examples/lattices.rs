//! Rank-one graded projectives as lattices in D: generators, simple factors,
//! homomorphisms and cokernels.

use weylgraded::lattice::cokernel_factors;
use weylgraded::{hom_generator, iota_lattice, to_dset, FinSet, GradedLattice};

fn main() {
    let a = GradedLattice::unit();
    println!("A:\n{a}\n");

    let xa = iota_lattice(&FinSet::from([0]), 0);
    println!("i{{0}}A = xA:\n{xa}\n");

    let p = iota_lattice(&FinSet::from([0, 3]), 1);
    println!("i{{0,3}}A<1>:\n{p}");
    println!("D = {}", p.dset());
    println!("formula: {}\n", to_dset(&FinSet::from([0, 3]), 1));

    for j in -2..=5 {
        print!("F_{j} = {}  ", p.simple_factor(j));
    }
    println!("\n");

    println!("Hom(A, xA) = ({})k[z]", hom_generator(&a, &xa));
    println!("Hom(xA, A) = ({})k[z]", hom_generator(&xa, &a));
    let q = iota_lattice(&FinSet::from([0, 3]), 0);
    println!("A / i{{0,3}}A has factors {:?}", cokernel_factors(&q, &a));

    // iota_j applied twice is multiplication by z+j
    let twice = a.involution(2).involution(2);
    println!("\ni_2 i_2 A:\n{twice}");
}
