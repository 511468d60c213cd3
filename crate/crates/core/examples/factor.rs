//! Factorization with the fewest ghost factors, and its round trip.

use supertrop::factor::{factor_min_ghosts, split_tan_intan};
use supertrop::text::{format_poly, parse_poly};
use supertrop::upoly::{e_equiv, tangible_roots};

fn main() -> supertrop::Result<()> {
    let inputs = [
        "x^2 + 3v*x + 2",
        "x^3 + 4v*x^2 + 5*x + 3",
        "(x + 1)*(x + 1)*(x + 2)",
        "x^4 + 6v*x^3 + 9*x^2 + 10v*x + 8",
        "0v*x^2 + 1*x + 0",
    ];
    for text in inputs {
        let f = parse_poly(text)?;
        let fac = factor_min_ghosts(&f)?;
        let (tan, intan) = split_tan_intan(&f)?;
        println!("{text}");
        println!("  factors    {fac}");
        println!("  tangible   {}", format_poly(&tan));
        println!("  intangible {}", format_poly(&intan));
        println!("  roots      {}", tangible_roots(&f)?);
        println!("  round trip {}", e_equiv(&fac.expand(), &f));
    }
    Ok(())
}
