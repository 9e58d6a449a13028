#[allow(dead_code)]
mod series_constants {
    include!("../examples/series_constants.rs");
}
#[allow(dead_code)]
mod radii_table {
    include!("../examples/radii_table.rs");
}
#[allow(dead_code)]
mod sharpness {
    include!("../examples/sharpness.rs");
}
#[allow(dead_code)]
mod distance_oracle {
    include!("../examples/distance_oracle.rs");
}
#[allow(dead_code)]
mod growth_envelopes {
    include!("../examples/growth_envelopes.rs");
}
#[allow(dead_code)]
mod jacobian {
    include!("../examples/jacobian.rs");
}
#[allow(dead_code)]
mod inequality_scan {
    include!("../examples/inequality_scan.rs");
}
#[allow(dead_code)]
mod cli_sweep {
    include!("../examples/cli_sweep.rs");
}

#[test]
fn series_constants_example() {
    let rows = series_constants::run_example().unwrap();
    assert!((rows[0].1 - 2.0 * (std::f64::consts::LN_2 - 1.0)).abs() < 1e-12);
    assert!(rows.iter().all(|r| r.2 <= 1e-13));
}

#[test]
fn radii_table_example() {
    let rows = radii_table::run_example().unwrap();
    assert_eq!(rows.len(), 63);
    assert!(rows
        .iter()
        .all(|(_, r)| (0.0..1.0).contains(&r.radius) && r.residual <= 1e-10));
}

#[test]
fn sharpness_example() {
    assert!(sharpness::run_example().unwrap().iter().all(|r| r.passed));
}

#[test]
fn distance_oracle_example() {
    let (d, est) = distance_oracle::run_example().unwrap();
    assert!((est[2].value - d).abs() <= 5e-3);
}

#[test]
fn growth_envelopes_example() {
    assert!(growth_envelopes::run_example().unwrap().iter().all(|r| r.passed));
}

#[test]
fn jacobian_example() {
    let rows = jacobian::run_example().unwrap();
    assert!(rows.iter().all(|(_, plain, r, rep)| *r == plain / 2.0 && rep.passed));
}

#[test]
fn inequality_scan_example() {
    assert!(inequality_scan::run_example().unwrap().iter().all(|r| r.consistent));
}

#[test]
fn cli_sweep_example() {
    let runs = cli_sweep::run_example();
    assert!(runs.iter().all(|(code, _)| *code == 0));
    assert_eq!(runs[0].1.lines().count(), 11);
}
