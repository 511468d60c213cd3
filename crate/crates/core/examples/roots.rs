//! Canonical full forms, essential parts and tangible root sets.

use supertrop::text::{format_poly, parse_poly};
use supertrop::upoly::{canonical_full, e_equiv, essential_part, tangible_roots};

fn main() -> supertrop::Result<()> {
    for text in ["x^2 + 3v*x + 2", "x^3 + 1*x + 0", "x^2 + 0*x + 4", "3v*x^2 + x + 0", "x^2 + 1v*x"] {
        let f = parse_poly(text)?;
        let full = canonical_full(&f)?;
        println!("f          {}", format_poly(&f));
        println!("  full     {}", format_poly(&full.to_poly()));
        println!("  essential {}", format_poly(&essential_part(&f)?));
        for c in full.corners() {
            println!("  corner   {} (multiplicity {})", c.value, c.multiplicity);
        }
        println!("  roots    {}", tangible_roots(&f)?);
    }

    // Different coefficients, same function.
    let f = parse_poly("x^2 + 0*x + 4")?;
    let g = parse_poly("x^2 + 2*x + 4")?;
    println!("{} ~ {}: {}", format_poly(&f), format_poly(&g), e_equiv(&f, &g));
    Ok(())
}
