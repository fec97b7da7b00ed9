use std::time::Instant;

use semideg::algebra::compute_algebra_basis;
use semideg::modbasis::compute_module_basis;
use semideg::poly::parse_poly;

#[test]
fn profile_completion() {
    let x = parse_poly("t^13+t^6").unwrap();
    let y = parse_poly("t^6+1/2*t^2+t").unwrap();
    let algebra = compute_algebra_basis(&[x.clone(), y.clone()]).unwrap();
    let t0 = Instant::now();
    let module = compute_module_basis(&[x.derivative(), y.derivative()], &algebra).unwrap();
    println!(
        "module {:?} ({} trace steps) in {:?}",
        module.degree_ideal().min_gens(),
        module.trace().len(),
        t0.elapsed()
    );
}
