use spherevol::{bounds, constructions, stationarity};

fn main() -> spherevol::Result<()> {
    let p6 = constructions::optimal_dplus3::<f64>(6)?;
    assert!((p6.volume()? - bounds::v_dplus3::<f64>(6)?).abs() < 1e-10);

    let report = stationarity::check_property_z(&p6, 1e-8)?;
    assert!(report.satisfies);
    Ok(())
}
