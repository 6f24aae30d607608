use diffusion_core::scalar::*;

#[test]
fn decimals_parse_exactly() {
    assert_eq!(parse_decimal("0.1").unwrap(), Exact::from_ratio(1, 10));
    assert_eq!(parse_decimal("-2.50").unwrap(), Exact::from_ratio(-5, 2));
    assert_eq!(
        parse_decimal("1e-9").unwrap(),
        Exact::from_ratio(1, 1_000_000_000)
    );
    assert_eq!(parse_decimal("3").unwrap(), Exact::from_ratio(3, 1));
    assert_eq!(parse_decimal(".5").unwrap(), Exact::from_ratio(1, 2));
    assert!(parse_decimal("abc").is_err());
    assert!(parse_decimal("").is_err());
    assert!(parse_decimal("1.2.3").is_err());
}

#[test]
fn floats_convert_through_shortest_decimal() {
    assert_eq!(Exact::from_f64(0.3).unwrap(), Exact::from_ratio(3, 10));
    assert_eq!(
        Exact::from_f64(1e-9).unwrap(),
        Exact::from_ratio(1, 1_000_000_000)
    );
    assert!(Exact::from_f64(f64::NAN).is_err());
}

#[test]
fn ratio_inputs() {
    let x: Exact = parse_scalar("1/11").unwrap();
    assert_eq!(x, Exact::from_ratio(1, 11));
    let y: f64 = parse_scalar("1/4").unwrap();
    assert_eq!(y, 0.25);
    assert!(parse_scalar::<f64>("1/0").is_err());
}

#[test]
fn wire_formats() {
    assert_eq!(0.3645f64.to_wire(), "3.6449999999999999e-1");
    assert_eq!(0.5f64.to_wire(), "5.0000000000000000e-1");
    assert_eq!(Exact::from_ratio(2, 22).to_wire(), "1/11");
}

#[test]
fn large_exact_round_trip() {
    let big = parse_decimal("123456789012345678901234567890.5").unwrap();
    let back = Exact::from_exact(&big);
    assert_eq!(f64::from_exact(&Exact::from_ratio(1, 4)), 0.25);
    assert_eq!(back, big);
}
