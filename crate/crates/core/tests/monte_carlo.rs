use diffusion_core::network::InformationStructure;
use diffusion_core::network::{line, orient, Seeding};
use diffusion_core::probability::*;

fn line3() -> InformationStructure {
    orient(&line(3).unwrap(), &Seeding::new([1])).unwrap()
}

#[test]
fn deterministic_given_seed() {
    let p = ModelParams::new(0.5, 0.1).unwrap();
    let a = monte_carlo(&line3(), &p, 10_000, 7);
    let b = monte_carlo(&line3(), &p, 10_000, 7);
    assert_eq!(a.states, b.states);
    assert_eq!(a.counts, b.counts);
    let c = monte_carlo(&line3(), &p, 10_000, 8);
    assert_ne!(a.counts, c.counts);
}

#[test]
fn single_trial() {
    let p = ModelParams::new(0.5, 0.1).unwrap();
    let a = monte_carlo(&line3(), &p, 1, 3);
    assert_eq!(a.states.len(), 1);
    assert_eq!(a.counts, vec![1]);
    let space = a.to_space();
    assert_eq!(space.probs(), &[1.0]);
}

#[test]
fn bad_mixture() {
    let p = ModelParams::new(0.5, 0.1).unwrap();
    assert!(monte_carlo_mixture(&[(0.5, line3())], &p, 10, 1).is_err());
}
