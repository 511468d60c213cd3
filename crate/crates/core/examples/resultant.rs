//! Sylvester resultants and the relative-primeness test.
//!
//! A tangible resultant means no common tangible root, a ghost one means a
//! common root, and the zero resultant means both polynomials vanish at the
//! bottom.

use supertrop::resultant::{
    decide, resultant, resultant_blockwise, resultant_raw, resultant_recursive, sylvester,
};
use supertrop::text::parse_poly;

fn main() -> supertrop::Result<()> {
    let pairs = [
        ("x + 1", "x + 3"),
        ("(x + 1)*(x + 3)", "x + 5"),
        ("x + 1", "x^2 + 3v*x + 2"),
        ("x^2 + 2*x", "x + 1v"),
        ("x*(x + 1)", "x*(x + 4)"),
    ];
    for (a, b) in pairs {
        let (f, g) = (parse_poly(a)?, parse_poly(b)?);
        let report = decide(&f, &g)?;
        println!("f = {a}, g = {b}");
        println!("{}", sylvester(&f, &g)?);
        println!("  resultant {}  raw {}", resultant(&f, &g)?, resultant_raw(&f, &g)?);
        match resultant_recursive(&f, &g) {
            Ok(r) => println!("  recursive {r}"),
            Err(e) => println!("  recursive: {e}"),
        }
        println!("  relatively prime: {}", report.relatively_prime);
        if report.relatively_prime {
            println!("  blockwise {}", resultant_blockwise(&f, &g)?);
        }
        if let Some(a) = report.common_root_witness {
            println!("  common root {a}");
        }
    }
    Ok(())
}
