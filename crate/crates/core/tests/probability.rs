use diffusion_core::network::{broadcast, line, orient, star, Seeding};
use diffusion_core::network::{AgentId, InformationStructure};
use diffusion_core::probability::*;
use diffusion_core::scalar::Exact;
use diffusion_core::{Caps, Scalar};

fn exact(n: i64, d: i64) -> Exact {
    Exact::from_ratio(n, d)
}

fn line3_at(seed: usize) -> InformationStructure {
    orient(&line(3).unwrap(), &Seeding::new([seed])).unwrap()
}

fn params() -> ModelParams<Exact> {
    ModelParams::new(exact(1, 2), exact(1, 10)).unwrap()
}

fn flags(theta: Theta, ys: &[bool], info: &InformationStructure) -> WorldState {
    let sources: Vec<AgentId> = info.agents().map(|a| info.parent(a).unwrap()).collect();
    WorldState::from_flags(theta, ys, &sources)
}

#[test]
fn line_all_informed_mass() {
    let info = line3_at(1);
    let space = enumerate_outcomes(&info, &params(), &Caps::default()).unwrap();
    let omega_star = flags(Theta::Good, &[true, true, true], &info);
    // 0.5 * 0.9^3
    assert_eq!(space.prob_of(&omega_star), exact(3645, 10000));
    assert_eq!(space.probability(&space.all_informed()), exact(3645, 10000));
}

#[test]
fn impossible_state_has_zero_mass() {
    let info = line3_at(1);
    let space = enumerate_outcomes(&info, &params(), &Caps::default()).unwrap();
    let s = flags(Theta::Good, &[false, true, true], &info);
    assert_eq!(space.prob_of(&s), exact(0, 1));
    assert!(space.index_of(&s).is_none());

    // ...but possible when 2 is the seed.
    let info2 = line3_at(2);
    let space2 = enumerate_outcomes(&info2, &params(), &Caps::default()).unwrap();
    let s2 = flags(Theta::Good, &[false, true, true], &info2);
    assert!(space2.prob_of(&s2) > exact(0, 1));
}

#[test]
fn bad_state_has_mass_one_minus_rho() {
    for info in [line3_at(1), line3_at(2), broadcast(3).unwrap()] {
        let space = enumerate_outcomes(&info, &params(), &Caps::default()).unwrap();
        let bad = space.event(|s| s.theta == Theta::Bad);
        assert_eq!(bad.count(), 1);
        assert_eq!(space.probability(&bad), exact(1, 2));
        assert_eq!(space.total(), exact(1, 1));
        assert_eq!(space.probability(&space.good()), exact(1, 2));
    }
}

#[test]
fn conditionals() {
    let info = line3_at(1);
    let space = enumerate_outcomes(&info, &params(), &Caps::default()).unwrap();
    let ystar = space.all_informed();
    let y1 = space.informed(AgentId(1));
    assert_eq!(
        probability(&space, &ystar, Some(&y1)).unwrap(),
        exact(81, 100)
    );
    for a in space.agents() {
        let n = space.uninformed(a);
        assert_eq!(space.conditional(&ystar, &n).unwrap(), exact(0, 1));
    }
    assert_eq!(
        space.conditional(&ystar, &space.nothing()),
        Err(ProbabilityError::ConditionOnNull)
    );
}

#[test]
fn float_and_exact_agree() {
    let info = orient(&star(4).unwrap(), &Seeding::new([2])).unwrap();
    let e = enumerate_outcomes(&info, &params(), &Caps::default()).unwrap();
    let f = enumerate_outcomes(&info, &params().to_f64(), &Caps::default()).unwrap();
    assert_eq!(e.states(), f.states());
    for (a, b) in e.probs().iter().zip(f.probs()) {
        assert!((a.to_f64() - b).abs() < 1e-15);
    }
    assert!((f.total() - 1.0).abs() < 1e-12);
}

#[test]
fn params_must_be_interior() {
    assert!(ModelParams::new(0.0, 0.1).is_err());
    assert!(ModelParams::new(0.5, 1.0).is_err());
    assert!(ModelParams::new(0.5, 0.1).is_ok());
}

#[test]
fn link_cap() {
    let info = broadcast(5).unwrap();
    let caps = Caps {
        max_agents: 6,
        max_links: 4,
    };
    assert_eq!(
        DeliveryTable::new(&info, &caps).unwrap_err(),
        ProbabilityError::CapExceeded { links: 5, cap: 4 }
    );
}

#[test]
fn mixture_validation() {
    let space = enumerate_outcomes(&line3_at(1), &params(), &Caps::default()).unwrap();
    assert_eq!(
        OutcomeSpace::mixture(&[(exact(1, 2), space.clone())]).unwrap_err(),
        ProbabilityError::BadMixture
    );
    let same = OutcomeSpace::mixture(&[(exact(1, 1), space.clone())]).unwrap();
    assert_eq!(same.states(), space.states());
    assert_eq!(same.probs(), space.probs());
}
