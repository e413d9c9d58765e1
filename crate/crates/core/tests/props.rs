//! Randomized invariants over partitions, paths, and tree codes.

use proptest::prelude::*;

use noncross::{
    canonical_code, complement, dyck_to_nc, is_self_complementary, kreweras, nc_to_dyck,
    nc_to_tree, rotate, transpose, Chirality, LatticePath, SetPartition, Step,
};

/// An arbitrary set partition of `[n]`, built from a random growth sequence.
fn any_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..n, n))
        .prop_map(|raw| {
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            for (i, &class) in raw.iter().enumerate() {
                let class = class.min(blocks.len());
                if class == blocks.len() {
                    blocks.push(Vec::new());
                }
                blocks[class].push(i + 1);
            }
            SetPartition::from_blocks(raw.len(), blocks).expect("growth sequence is valid")
        })
}

/// An arbitrary Dyck path of semilength up to `max_n`: shuffle a balanced
/// step multiset, then rotate it to start past the prefix-sum minimum.
fn any_dyck_path(max_n: usize) -> impl Strategy<Value = LatticePath> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let base: Vec<bool> = (0..2 * n).map(|i| i < n).collect();
            Just(base).prop_shuffle()
        })
        .prop_map(|ups| {
            let mut height = 0i64;
            let mut min = (0i64, 0usize);
            for (i, &up) in ups.iter().enumerate() {
                height += if up { 1 } else { -1 };
                if height < min.0 {
                    min = (height, i + 1);
                }
            }
            let steps: Vec<Step> = (0..ups.len())
                .map(|i| {
                    if ups[(min.1 + i) % ups.len()] {
                        Step::Up
                    } else {
                        Step::Down
                    }
                })
                .collect();
            LatticePath::new(steps)
        })
}

/// An arbitrary noncrossing partition of `[n]`, read off a random Dyck path.
fn any_nc_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    any_dyck_path(max_n).prop_map(|path| dyck_to_nc(&path).expect("path is Dyck"))
}

proptest! {
    #[test]
    fn formatting_round_trips(p in any_partition(12)) {
        let parsed: SetPartition = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn rotation_and_complement_preserve_crossing_status(p in any_partition(10), k in -30i64..30) {
        prop_assert_eq!(rotate(&p, k).is_noncrossing(), p.is_noncrossing());
        prop_assert_eq!(complement(&p).is_noncrossing(), p.is_noncrossing());
    }

    #[test]
    fn dyck_paths_round_trip(path in any_dyck_path(14)) {
        prop_assert!(path.is_dyck());
        let p = dyck_to_nc(&path).unwrap();
        prop_assert_eq!(nc_to_dyck(&p).unwrap(), path);
    }

    #[test]
    fn kreweras_twice_is_the_inverse_rotation(p in any_nc_partition(12)) {
        let twice = kreweras(&kreweras(&p).unwrap()).unwrap();
        prop_assert_eq!(twice, rotate(&p, -1));
    }

    #[test]
    fn transpose_is_an_involution(p in any_nc_partition(12)) {
        prop_assert_eq!(transpose(&transpose(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn self_complementary_status_is_a_class_property(p in any_nc_partition(12), k in -30i64..30) {
        let q = rotate(&complement(&p), k);
        prop_assert_eq!(is_self_complementary(&q), is_self_complementary(&rotate(&p, -k)));
    }

    #[test]
    fn tree_codes_ignore_rotation(p in any_nc_partition(10), k in -30i64..30) {
        let code = canonical_code(&nc_to_tree(&p).unwrap(), Chirality::RotationOnly);
        let rotated = canonical_code(&nc_to_tree(&rotate(&p, k)).unwrap(), Chirality::RotationOnly);
        prop_assert_eq!(code, rotated);
    }

    #[test]
    fn dihedral_codes_ignore_reflection(p in any_nc_partition(10)) {
        let code = canonical_code(&nc_to_tree(&p).unwrap(), Chirality::RotationAndReflection);
        let reflected =
            canonical_code(&nc_to_tree(&complement(&p)).unwrap(), Chirality::RotationAndReflection);
        prop_assert_eq!(code, reflected);
    }
}
