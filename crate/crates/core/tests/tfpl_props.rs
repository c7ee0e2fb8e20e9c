use std::sync::OnceLock;

use proptest::prelude::*;

use tfpl::drift::{drift, is_stable, stabilize, wieland_left, wieland_right, Direction};
use tfpl::enumerate::{count_tables, enumerate_tfpls, load_table, save_table, CountTable};
use tfpl::Tfpl;

fn corpus(n: usize) -> &'static [Tfpl] {
    static SETS: [OnceLock<Vec<Tfpl>>; 6] = [const { OnceLock::new() }; 6];
    SETS[n].get_or_init(|| enumerate_tfpls(n).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_and_json_round_trip(i in 0usize..281) {
        let f = &corpus(4)[i];
        prop_assert_eq!(&f.to_text().parse::<Tfpl>().unwrap(), f);
        let json = serde_json::to_string(f).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Tfpl>(&json).unwrap(), f);
    }

    #[test]
    fn drift_is_invertible(i in 0usize..3330) {
        let f = &corpus(5)[i];
        let l = wieland_left(f, None).unwrap();
        prop_assert!(l.is_valid());
        prop_assert_eq!(&wieland_right(&l, Some(&f.v_word())).unwrap(), f);
        let r = wieland_right(f, None).unwrap();
        prop_assert_eq!(&wieland_left(&r, Some(&f.u_word())).unwrap(), f);
    }

    #[test]
    fn reflection_swaps_directions(i in 0usize..3330) {
        let f = &corpus(5)[i];
        prop_assert_eq!(f.reflect().reflect(), f.clone());
        prop_assert_eq!(
            drift(&f.reflect(), Direction::Right).unwrap(),
            drift(f, Direction::Left).unwrap().reflect()
        );
    }

    #[test]
    fn drifters_bound_the_excess(i in 0usize..3330) {
        let f = &corpus(5)[i];
        let b = f.boundary().unwrap();
        prop_assert!(b.excess() >= 0);
        prop_assert!(f.drifters().len() as i64 <= b.excess());
        prop_assert_eq!(is_stable(f), f.drifters().is_empty());
        let arm = stabilize(f, Direction::Left).unwrap();
        prop_assert!(is_stable(arm.last()));
        prop_assert!(arm.steps_before_stable().unwrap_or(0) < 2 * f.size());
        prop_assert_eq!(arm.steps_before_stable().is_none(), is_stable(f));
    }

    #[test]
    fn orientation_recovers_boundary(i in 0usize..281) {
        let f = &corpus(4)[i];
        let o = f.canonical_orientation().unwrap();
        prop_assert!(o.is_consistent());
        prop_assert_eq!(&o.forget(), f);
        prop_assert_eq!(o.oriented_boundary(), f.boundary().unwrap());
    }
}

#[test]
fn table_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t4.csv");
    let table = count_tables(4);
    save_table(&table, &path).unwrap();
    assert_eq!(load_table(&path).unwrap(), table);
    assert_eq!(CountTable::from_csv(&table.to_csv()).unwrap(), table);
}

#[test]
fn known_totals() {
    let totals: Vec<u64> = (1..=5).map(|n| count_tables(n).total()).collect();
    assert_eq!(totals, [2, 7, 36, 281, 3330]);
}
