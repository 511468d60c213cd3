//! Division certificates: `g` divides `f` when some tangible `q` makes
//! `f + q·g` ghost with the same ghost image as `f`.

use supertrop::division::{divides_linear, radical_member_check, verify_division};
use supertrop::text::{format_poly, parse_poly};
use supertrop::{Poly, Rational};

fn main() -> supertrop::Result<()> {
    let f = parse_poly("x^2 + 6v*x + 7")?;
    println!("f = {}", format_poly(&f));
    for a in [0, 1, 3, 4, 6, 7] {
        let a = Rational::from_integer(a);
        match divides_linear(&f, a)? {
            Some(w) => println!(
                "  x + {a} divides f: q = {}, f + q(x + {a}) = {}",
                format_poly(&w.q),
                format_poly(&w.ghost_sum)
            ),
            None => println!("  x + {a} does not divide f"),
        }
    }

    let g = parse_poly("x + 2")?;
    let h = parse_poly("x^2 + 4v*x + 5")?;
    let q = parse_poly("x + 3")?;
    println!(
        "verify {} | {} with q = {}: {}",
        format_poly(&g),
        format_poly(&h),
        format_poly(&q),
        verify_division(&h, &g, &q)?
    );

    let a = parse_poly("x + 1")?;
    let b = a.pow(2).nu();
    println!(
        "radical check (x + 1)^2 against {}: {}",
        format_poly(&b),
        radical_member_check(&a, 2, &b, &Poly::one())?
    );
    Ok(())
}
