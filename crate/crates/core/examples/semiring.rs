//! Arithmetic in the supertropical semifield: tangible and ghost layers,
//! the ghost map and its tangible lift.

use supertrop::{Element, Rational};

fn main() {
    let a = Element::tangible(3);
    let b = Element::tangible(5);
    let c = Element::ghost(5);

    println!("{a} + {b} = {}", a + b);
    println!("{b} + {b} = {}", b + b);
    println!("{a} + {c} = {}", a + c);
    println!("{a} * {c} = {}", a * c);
    println!("nu({a}) = {}, hat({c}) = {}", a.nu(), c.hat());
    println!("{a}^4 = {}", a.pow(4));
    println!("zero + {a} = {}", Element::Zero + a);

    let half = Element::Tangible(Rational::new(1, 2));
    println!("{half} / {a} = {}", half.try_div(&a).unwrap());
    println!("{b} in ghost ideal: {}, {c}: {}", b.in_ghost_ideal(), c.in_ghost_ideal());
}
