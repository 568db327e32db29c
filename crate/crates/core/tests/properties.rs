mod common;

use std::sync::Arc;

use lacn::constructions::construct;
use lacn::transforms::complement;
use lacn::{verify, CertificateJson, EdgeLabeling, LabelingCertificate, Provenance};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn invariants(c: &LabelingCertificate) {
    let q = c.labeling.q() as u64;
    assert_eq!(c.coloring.total(), q * (q + 1));
    let mut labels = c.labeling.labels().to_vec();
    labels.sort_unstable();
    assert!(labels.iter().copied().eq(1..=q as u32));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn random_labelings(n in 3usize..9, extra in 0usize..12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = Arc::new(common::random_connected(&mut rng, n, q));
        let mut labels: Vec<u32> = (1..=q as u32).collect();
        labels.shuffle(&mut rng);
        let f = EdgeLabeling::new(g.clone(), labels).unwrap();
        let c = verify(&f, Provenance::Searched);
        invariants(&c);
        let naive_valid = g.edges().iter().all(|&(a, b)| c.coloring.color(a) != c.coloring.color(b));
        prop_assert_eq!(c.valid, naive_valid);
        prop_assert_eq!(c.valid, c.conflicts.is_empty());

        let h = complement(&f);
        let back = complement(&h);
        prop_assert_eq!(back.labels(), f.labels());
        invariants(&verify(&h, Provenance::Searched));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn constructions_round_trip(tag in prop::sample::select(lacn::constructions::TAGS.to_vec()), m in 1usize..9, n in 1usize..9) {
        if let Ok(c) = construct(tag, Some(m), Some(n)) {
            prop_assert!(c.valid);
            invariants(&c);
            let text = serde_json::to_string(&c.to_json()).unwrap();
            let json: CertificateJson = serde_json::from_str(&text).unwrap();
            let back = LabelingCertificate::from_json(&json).unwrap();
            prop_assert_eq!(back.labeling.labels(), c.labeling.labels());
            prop_assert_eq!(back.color_count(), c.color_count());
        }
    }
}
