//! Two-variable polynomials: resultant in `y`, specialization of `x`, and a
//! grid probe of the Bézout bound.

use supertrop::bivariate::{bezout_report, resultant_in_second, Var, Window};
use supertrop::text::{format_bipoly, format_poly, parse_bipoly};
use supertrop::{Element, Rational};

fn main() -> supertrop::Result<()> {
    let f = parse_bipoly("x + y + 0")?;
    let g = parse_bipoly("-1*x + -2*y + 0")?;
    println!("F = {}", format_bipoly(&f));
    println!("G = {}", format_bipoly(&g));

    let r = resultant_in_second(&f, &g)?;
    println!("Res_y(F, G) = {}", format_poly(&r));
    let c = Element::tangible(2);
    println!("F(2, y) as a polynomial in y: {}", format_poly(&f.specialize(Var::First, c)));
    println!("Res at x = 2: {}", r.eval(c));

    let report = bezout_report(&f, &g, &Window::default(), Rational::new(1, 4))?;
    println!(
        "bound {}, sampled {}, ordinary {}, holds {}",
        report.bound,
        report.sampled_common_roots.len(),
        report.ordinary_count,
        report.bound_holds
    );
    for (x, y) in &report.ordinary_points {
        println!("  ordinary ({x}, {y})");
    }

    let conic = parse_bipoly("x^2 + x*y + y^2 + 1*x + 1*y + 0")?;
    let line = parse_bipoly("x + 2*y + 3")?;
    let report = bezout_report(&conic, &line, &Window::default(), Rational::new(1, 2))?;
    print!("{}", report.to_csv());
    Ok(())
}
