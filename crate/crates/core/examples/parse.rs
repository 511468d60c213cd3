//! Reading and printing polynomials.

use supertrop::text::{bipoly_json, format_bipoly, format_poly, parse_bipoly, parse_poly, poly_json};

fn main() {
    for text in ["(x + 2)^3", "x^2 + 3v*x + -1/2", "-inf", "2v", "(x + y + 1)^2"] {
        match parse_poly(text) {
            Ok(p) => println!("{text:24} -> {}  {}", format_poly(&p), poly_json(&p)),
            Err(_) => {
                let p = parse_bipoly(text).expect("valid bivariate input");
                println!("{text:24} -> {}  {}", format_bipoly(&p), bipoly_json(&p));
            }
        }
    }
    for bad in ["x^", "x + z", "1/0", "(x + 1"] {
        println!("{bad:24} -> {}", parse_poly(bad).unwrap_err());
    }
}
