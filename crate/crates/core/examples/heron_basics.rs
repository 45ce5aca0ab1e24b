//! Certify a triangle, move between sides and the (x, y, t) parametrization,
//! and reduce to primitive integer sides.

use heron_pairs::geometry::{
    certify_heron, normalize_primitive, param_from_triangle, triangle_from_param, ParamTriangle,
    Triangle,
};
use heron_pairs::rational::{int, rat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tri = Triangle::from_ints(13, 14, 15)?;
    let cert = certify_heron(&tri)?;
    println!("{tri}: area {}, R {}, r {}, P {}", cert.area, cert.circumradius, cert.inradius, cert.perimeter);

    let param = param_from_triangle(&cert);
    println!("parametrized as x = {}, y = {}, t = {}", param.x, param.y, param.t);

    // every rational triangle arises from some (x, y, t)
    let (back, _) = triangle_from_param(&ParamTriangle::new(int(1), int(1), int(2))?)?;
    println!("(1, 1, 2) gives {back}, primitive {}", normalize_primitive(&back));

    match certify_heron(&Triangle::new(int(2), int(3), int(4))?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("2, 3, 4: {e}"),
    }
    println!("scaled 13-14-15 by 1/2: {}", tri.scaled(&rat(1, 2))?);
    Ok(())
}
