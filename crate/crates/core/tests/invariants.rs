//! Grid-wide identities at their full stated bounds.

use num_bigint::{BigInt, BigUint};
use perimeter_partitions::counting::{franklin_counts, refined_counts};
use perimeter_partitions::series::{gf_catalog, series_coeffs, GfName};

#[test]
fn refined_counts_agree_and_partition_the_j1_class() {
    for n in 0..=35u64 {
        for r in 2..=5u64 {
            let mut total = BigUint::default();
            for u in 1..=n {
                let (alpha, beta) = refined_counts(n, r, u).unwrap();
                assert_eq!(alpha, beta, "n={n} r={r} u={u}");
                total += alpha;
            }
            let (o, d) = franklin_counts(n, r, 1).unwrap();
            assert_eq!(total, o, "sum over u at n={n} r={r}");
            assert_eq!(o, d, "n={n} r={r}");
        }
    }
}

#[test]
fn residue_class_series_shift() {
    for r in 3..=6u64 {
        let gd = |d| series_coeffs(&gf_catalog(GfName::GRD, Some(r), Some(d)).unwrap(), 100);
        for d in 2..r {
            let (cur, prev) = (gd(d), gd(d - 1));
            assert_eq!(cur[0], BigInt::from(0), "r={r} d={d} M=1");
            assert_eq!(cur[1..], prev[..99], "r={r} d={d}");
        }
    }
}
