use std::collections::BTreeMap;

use expdio_cli::record::{OutputRecord, ParityRecord, PrefilterRecord, SolutionRecord};
use proptest::prelude::*;

fn digits() -> impl Strategy<Value = String> {
    "[0-9]{1,40}"
}

fn solution() -> impl Strategy<Value = SolutionRecord> {
    (digits(), digits(), digits()).prop_map(|(x, y, z)| SolutionRecord { x, y, z })
}

prop_compose! {
    fn output_record()(
        abc in (digits(), digits(), digits()),
        solutions in proptest::collection::vec(solution(), 0..6),
        counts in (digits(), digits(), digits(), digits()),
        parity in proptest::collection::vec((0u8..2, 0u8..2), 0..4),
        verdicts in proptest::collection::btree_map("[a-z_]{1,10}", any::<bool>(), 0..4),
        stats in (digits(), digits(), digits(), 0.0f64..=1.0),
        timing in proptest::option::of(0.0f64..1e6),
    ) -> OutputRecord {
        OutputRecord {
            kind: "instance".into(),
            schema_version: "1".into(),
            a: abc.0, b: abc.1, c: abc.2,
            solutions,
            omega_c: counts.0,
            count_bound: counts.1,
            z_bound: counts.2,
            le_z_bound: counts.3,
            parity_classes: parity
                .into_iter()
                .map(|(x, y)| ParityRecord { x_parity: x.to_string(), y_parity: y.to_string() })
                .collect(),
            verdicts: verdicts.into_iter().collect::<BTreeMap<_, _>>(),
            prefilter_stats: PrefilterRecord {
                candidates: stats.0,
                pruned: stats.1,
                exact_checks: stats.2,
                prune_rate: stats.3,
            },
            timing_ms: timing,
        }
    }
}

proptest! {
    #[test]
    fn json_round_trip(record in output_record()) {
        let text = serde_json::to_string(&record).unwrap();
        let back: OutputRecord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, record);
    }
}
