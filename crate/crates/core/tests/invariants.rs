//! Properties that hold on every seeded forest and every loss rate.

use diffusion_core::belief::{classify_common_belief_g, BeliefEngine};
use diffusion_core::extensions::{general_outcomes, orient_general, GeneralScenario};
use diffusion_core::game::{
    is_equilibrium, solve_adoption, AdoptionParams, BinaryGame, EquilibriumCase,
};
use diffusion_core::informativeness::{
    diffusion_compare, first_order_compare, second_order_compare,
};
use diffusion_core::network::{orient, seeded_forest_from_prufer, InformationStructure};
use diffusion_core::probability::{closed_form, enumerate_outcomes, ClosedForm, ModelParams};
use diffusion_core::{Caps, Exact, Scalar};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Exact {
    Exact::from_ratio(n, d)
}

/// A seeded forest on `1..=I` from a Prüfer sequence over `0..=I`.
fn forest() -> impl Strategy<Value = InformationStructure> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec(0..=n, n - 1).prop_map(move |seq| {
            let (f, s) = seeded_forest_from_prufer(&seq, n);
            orient(&f, &s).unwrap()
        })
    })
}

fn params() -> impl Strategy<Value = ModelParams<Exact>> {
    (1i64..20, 1i64..20).prop_map(|(r, e)| ModelParams::new(q(r, 20), q(e, 20)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn probabilities_sum_to_one(info in forest(), p in params()) {
        let space = enumerate_outcomes(&info, &p, &Caps::default()).unwrap();
        prop_assert_eq!(space.total(), q(1, 1));
        let n = info.agent_count();
        let ystar = space.conditional(&space.all_informed(), &space.good()).unwrap();
        prop_assert_eq!(ystar, p.delivery().powi(n));
    }

    #[test]
    fn uninformed_belief_depends_on_depth_only(info in forest(), p in params()) {
        let space = enumerate_outcomes(&info, &p, &Caps::default()).unwrap();
        let n = info.agent_count();
        for a in info.agents() {
            let k = info.depth(a).unwrap();
            let got = space.conditional(&space.good(), &space.uninformed(a)).unwrap();
            prop_assert_eq!(got, closed_form(ClosedForm::GGivenNK, k, &p, n).unwrap());
        }
    }

    #[test]
    fn common_belief_matches_classification(info in forest(), p in params(), t in 0i64..=40) {
        let space = enumerate_outcomes(&info, &p, &Caps::default()).unwrap();
        let level = q(t, 40);
        let cb = BeliefEngine::new(&space).common_p_belief(&space.good(), &level).unwrap();
        let region = classify_common_belief_g(&p, info.agent_count()).region_at(&level).clone();
        prop_assert_eq!(cb.label, region.label);
        prop_assert_eq!(cb.probability, region.probability);
    }

    #[test]
    fn general_orientation_agrees_on_forests(seq in prop::collection::vec(0usize..=4, 3), p in params()) {
        let (f, s) = seeded_forest_from_prufer(&seq, 4);
        let tree = orient(&f, &s).unwrap();
        let general = orient_general(f.graph(), &s).unwrap();
        let caps = Caps::default();
        let a = enumerate_outcomes(&tree, &p, &caps).unwrap();
        let b = general_outcomes(&GeneralScenario::fixed(general), &p, &caps).unwrap();
        prop_assert_eq!(a.states(), b.states());
        prop_assert_eq!(a.probs(), b.probs());
    }

    #[test]
    fn solved_profile_is_an_equilibrium(info in forest(), p in params(), c in 1i64..100) {
        let space = enumerate_outcomes(&info, &p, &Caps::default()).unwrap();
        let game = AdoptionParams::new(q(c, 100)).unwrap();
        let r = solve_adoption(&info, &space, &game).unwrap();
        prop_assert!(r.certified);
        let adoption = BinaryGame::Adoption(game);
        prop_assert!(is_equilibrium(&space, &adoption, &r.profile).unwrap());
        let expected = if r.threshold <= r.uninformed_seed_belief {
            EquilibriumCase::AlwaysAdopt
        } else if r.threshold <= r.informed_seed_belief {
            EquilibriumCase::AdoptIfInformed
        } else {
            EquilibriumCase::NeverAdopt
        };
        prop_assert_eq!(r.case, expected);
    }

    #[test]
    fn orderings_are_antisymmetric(a in forest(), b in forest(), p in params()) {
        prop_assume!(a.agent_count() == b.agent_count());
        let caps = Caps::default();
        let p = p.to_f64();
        let sa = enumerate_outcomes(&a, &p, &caps).unwrap();
        let sb = enumerate_outcomes(&b, &p, &caps).unwrap();
        let d = diffusion_compare(&a, &b).unwrap().relation;
        prop_assert_eq!(d.reversed(), diffusion_compare(&b, &a).unwrap().relation);
        let f = first_order_compare(&sa, &sb).unwrap().relation;
        prop_assert_eq!(f.reversed(), first_order_compare(&sb, &sa).unwrap().relation);
        let s = second_order_compare(&sa, &sb).unwrap().relation;
        prop_assert_eq!(s, f.reversed());
    }
}
