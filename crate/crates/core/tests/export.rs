use diffusion_core::network::{line, orient, Seeding};
use diffusion_core::probability::{enumerate_outcomes, ModelParams};
use diffusion_core::scalar::{Exact, Scalar};
use diffusion_core::Caps;

#[test]
fn exact_csv_for_line() {
    let info = orient(&line(2).unwrap(), &Seeding::new([1])).unwrap();
    let params = ModelParams::new(Exact::from_ratio(1, 2), Exact::from_ratio(1, 10)).unwrap();
    let space = enumerate_outcomes(&info, &params, &Caps::default()).unwrap();
    assert_eq!(
        space.to_csv(),
        "theta,x1,x2,probability\n\
         g,n,n,1/20\n\
         g,y,n,9/200\n\
         g,y,y,81/200\n\
         b,n,n,1/2\n"
    );
}

#[test]
fn float_rows_use_17_significant_digits() {
    let info = orient(&line(2).unwrap(), &Seeding::new([1])).unwrap();
    let params = ModelParams::new(0.5, 0.1).unwrap();
    let space = enumerate_outcomes(&info, &params, &Caps::default()).unwrap();
    let rows = space.to_rows();
    assert_eq!(rows[3].probability, "5.0000000000000000e-1");
    assert_eq!(rows[3].signals, vec!["n", "n"]);
}
