mod common;

use klcolour::certificate::{verify_box_cograph, BoxCertificate};
use klcolour::ferrers::build_ferrers;
use klcolour::kappa::{kappa_hat, lambda_hat};
use klcolour::oracle::{search_kl_colouring, CliqueFamily, Oracle, OracleBudget};
use klcolour::{build_cotree, Graph, PartitionSequence};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{graph_classes, random_cograph, random_graph};

fn oracle(g: &Graph) -> Oracle {
    Oracle::new(g, OracleBudget::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cotree_sequences_match_oracle(seed in any::<u64>()) {
        let (t, g) = random_cograph(&mut ChaCha8Rng::seed_from_u64(seed), 10);
        let mut o = oracle(&g);
        prop_assert_eq!(kappa_hat(&t), o.kappa_hat().unwrap());
        prop_assert_eq!(lambda_hat(&t), o.lambda_hat().unwrap());
        prop_assert_eq!(o.kappa_hat().unwrap().sum(), g.n());
    }

    #[test]
    fn conjugacy_on_general_graphs(seed in any::<u64>(), n in 1usize..=7, p in 0.05f64..0.95) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        let mut o = oracle(&g);
        let k = o.kappa_hat().unwrap();
        prop_assert_eq!(k.conjugate(), o.lambda_hat().unwrap());
        let mut co = oracle(&g.complement());
        prop_assert_eq!(co.lambda_hat().unwrap(), k);
    }

    #[test]
    fn maximal_cliques_suffice(seed in any::<u64>(), n in 1usize..=7, p in 0.05f64..0.95) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        let mut o = oracle(&g);
        for l in 0..=n {
            prop_assert_eq!(o.kappa_with(l, CliqueFamily::Maximal), o.kappa_with(l, CliqueFamily::All));
        }
    }

    #[test]
    fn partition_search_matches_recursion(seed in any::<u64>(), n in 1usize..=8, p in 0.05f64..0.95) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        let mut o = oracle(&g);
        for k in 0..=3 {
            for l in 0..=3 {
                let found = search_kl_colouring(&g, k, l).unwrap();
                prop_assert_eq!(found.is_some(), o.is_kl_colourable(k, l).unwrap());
                if let Some(c) = found {
                    prop_assert_eq!(c.verify(&g, k, l), Ok(()));
                }
            }
        }
    }

    #[test]
    fn ferrers_read_offs_are_complementary(seed in any::<u64>()) {
        let (t, g) = random_cograph(&mut ChaCha8Rng::seed_from_u64(seed), 10);
        let f = build_ferrers(&t);
        let mut o = oracle(&g);
        for k in 0..=4 {
            for l in 0..=4 {
                let colouring = f.read_colouring(k, l);
                let obstruction = f.read_obstruction(k, l);
                prop_assert_ne!(colouring.is_ok(), obstruction.is_ok());
                prop_assert_eq!(colouring.is_ok(), o.is_kl_colourable(k, l).unwrap());
                if let Ok(c) = colouring {
                    prop_assert_eq!(c.verify(&g, k, l), Ok(()));
                }
                if let Ok(cert) = obstruction {
                    prop_assert_eq!(verify_box_cograph(&g, &cert), Ok(()));
                }
            }
        }
    }
}

/// On every cograph with at most six vertices, a constant `κ̂` and membership
/// in the box class coincide.
#[test]
fn constant_kappa_characterises_box_cographs() {
    let mut seen = 0;
    for n in 1..=6 {
        for g in graph_classes(n) {
            let Ok(t) = build_cotree(&g) else { continue };
            let kappa = kappa_hat(&t);
            let constant = kappa == PartitionSequence::constant(kappa.get(0), kappa.len());
            assert_eq!(constant, oracle(&g).is_box_cograph().unwrap(), "{g:?}");
            seen += 1;
        }
    }
    // Cographs on 1..=6 vertices up to isomorphism.
    assert_eq!(seen, 1 + 2 + 4 + 10 + 24 + 66);
}

#[test]
fn box_oracle_accepts_disjoint_cliques_and_their_complements() {
    for k in 1..=3 {
        for l in 1..=3 {
            let g = klcolour::generate::disjoint_cliques(k, l).evaluate();
            assert!(oracle(&g).is_box_cograph_of(k, l).unwrap());
            assert!(oracle(&g.complement()).is_box_cograph_of(l, k).unwrap());
            let cert = BoxCertificate { k, l, vertices: klcolour::VertexSet::all(&g) };
            assert_eq!(verify_box_cograph(&g, &cert), Ok(()));
        }
    }
}

#[test]
fn oracle_rejects_oversized_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = random_graph(&mut rng, 13, 0.5);
    assert!(Oracle::new(&g, OracleBudget::default()).is_err());
    let wide = OracleBudget { max_vertices: 13, ..OracleBudget::default() };
    assert!(Oracle::new(&g, wide).unwrap().kappa_hat().is_ok());
}
