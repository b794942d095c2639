use weylgraded::skew::x_to_y_factor;
use weylgraded::{Poly, RationalPoly, SkewElement};

fn main() {
    let x = SkewElement::x();
    let y = SkewElement::y();
    let z = SkewElement::z();

    println!("x*y = {}", &x * &y);
    println!("y*x = {}", &y * &x);
    println!("xy - yx = {}", x.commutator(&y));
    println!("x*z = {}", &x * &z);

    // y lives in D as (z-1)x^-1
    println!("y = {y}");
    println!("y^3 = {}", SkewElement::y_pow(3));
    println!("x^3 y^3 = {}", &SkewElement::x_pow(3) * &SkewElement::y_pow(3));

    for u in [z.clone(), y.clone(), SkewElement::x_pow(-1)] {
        println!("{u} in A: {}", u.weyl_membership());
    }

    // x^m = h(z) y^-m
    for m in [-2, 2] {
        println!("x^{m} = ({}) y^{}", x_to_y_factor(m), -m);
    }

    let f: RationalPoly = Poly::product_of_linear([0, 1]).into();
    let u = SkewElement::y_form(f, -2);
    println!("z(z+1)·y^-2 = {u}, back to y-form: {:?}", u.to_y_form());
}
