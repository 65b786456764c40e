use super::*;
use crate::gf::field_make;
use crate::perm::{contains_subgroup, named_group, NamedGroup};
use num::BigInt;
use std::collections::{HashSet, VecDeque};

fn f(p: u32, e: u32) -> FieldSpec {
    field_make(p, e).unwrap()
}

fn words(code: &LinearCode) -> HashSet<Vec<Elem>> {
    code.enumerate_codewords().unwrap().into_iter().collect()
}

#[test]
fn monomial_set_order_and_size() {
    let ms = monomial_set(2, 1, 2).unwrap();
    assert_eq!(ms.exponents, vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
    for q in [2usize, 3, 4] {
        for m in 1..=3usize {
            for r in 0..=m * (q - 1) {
                let ms = monomial_set(q, r, m).unwrap();
                assert_eq!(BigInt::from(ms.exponents.len()), monomial_count(q, r, m));
            }
        }
    }
}

#[test]
fn first_order_binary_code_is_even_weight() {
    let code = grm_make(&f(2, 1), 1, 2).unwrap();
    assert_eq!(
        code.generator,
        vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]
    );
    let lin = code.as_linear();
    assert_eq!(lin.dimension(), 3);
    let all = lin.enumerate_codewords().unwrap();
    assert_eq!(all.len(), 8);
    for w in &all {
        assert_eq!(w.iter().filter(|&&x| x == 1).count() % 2, 0);
    }
    assert!(lin.contains(&[0, 1, 0, 1]));
    assert!(!lin.contains(&[0, 1, 1, 1]));
}

#[test]
fn degree_zero_is_repetition() {
    for (p, e, m) in [(2, 1, 3), (3, 1, 2), (2, 2, 1)] {
        let spec = f(p, e);
        let code = grm_make(&spec, 0, m as usize).unwrap();
        assert_eq!(code.dimension(), 1);
        assert!(code.generator[0].iter().all(|&x| x == 1));
    }
}

#[test]
fn full_degree_code_fills_the_space() {
    for (p, e, m) in [(2u32, 1u32, 3usize), (3, 1, 2), (5, 1, 1)] {
        let spec = f(p, e);
        let q = spec.q;
        let code = grm_make(&spec, m * (q - 1), m).unwrap();
        assert_eq!(code.dimension(), code.n);
    }
}

#[test]
fn dimension_matches_count_across_grid() {
    for (p, e) in [(2u32, 1u32), (3, 1), (2, 2), (5, 1)] {
        let spec = f(p, e);
        let q = spec.q;
        for m in 1..=2usize {
            for r in 0..=m * (q - 1) {
                let code = grm_make(&spec, r, m).unwrap();
                assert_eq!(BigInt::from(code.dimension()), monomial_count(q, r, m));
            }
        }
    }
}

#[test]
fn degree_out_of_range_and_size_cap() {
    let spec = f(2, 1);
    assert_eq!(
        grm_make(&spec, 3, 2).unwrap_err(),
        GrmError::DegreeOutOfRange { r: 3, max: 2 }
    );
    assert!(matches!(grm_make(&spec, 1, 21).unwrap_err(), GrmError::TooLarge(_)));
}

#[test]
fn codes_are_closed_under_addition() {
    for (p, e, r, m) in [(2u32, 1u32, 1usize, 2usize), (3, 1, 1, 1)] {
        let spec = f(p, e);
        let lin = grm_make(&spec, r, m).unwrap().as_linear();
        let set = words(&lin);
        for a in &set {
            for b in &set {
                let sum: Vec<Elem> =
                    a.iter().zip(b).map(|(&x, &y)| spec.add(x, y)).collect();
                assert!(set.contains(&sum));
            }
        }
    }
}

#[test]
fn cosets_partition_the_code() {
    let lin = grm_make(&f(2, 1), 1, 2).unwrap().as_linear();
    let zero = coset(&lin, 0).unwrap();
    let one = coset(&lin, 1).unwrap();
    let expect_zero: HashSet<Vec<Elem>> = [
        vec![0, 0, 0, 0],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 1],
        vec![0, 1, 1, 0],
    ]
    .into_iter()
    .collect();
    assert_eq!(zero.iter().cloned().collect::<HashSet<_>>(), expect_zero);
    let all = words(&lin);
    let union: HashSet<Vec<Elem>> = zero.iter().chain(&one).cloned().collect();
    assert_eq!(union, all);
    assert_eq!(zero.len(), 4);
    assert_eq!(one.len(), 4);
    assert!(zero.iter().all(|w| w[0] == 0));
    assert!(one.iter().all(|w| w[0] == 1));
}

#[test]
fn repetition_cosets_are_singletons() {
    let spec = f(3, 1);
    let lin = grm_make(&spec, 0, 2).unwrap().as_linear();
    for x0 in 0..3 {
        let cs = coset(&lin, x0).unwrap();
        assert_eq!(cs, vec![vec![x0; 9]]);
    }
}

#[test]
fn coset_needs_a_live_first_position() {
    let spec = f(2, 1);
    let lin = LinearCode::new(&spec, 2, vec![vec![0, 1]]).unwrap();
    assert_eq!(coset_basis(&lin).unwrap_err(), GrmError::DegeneratePosition);
}

#[test]
fn puncture_validates_the_index_set() {
    let lin = grm_make(&f(2, 1), 1, 2).unwrap().as_linear();
    assert_eq!(puncture(&lin, &[]).unwrap_err(), GrmError::EmptyIndexSet);
    assert!(matches!(puncture(&lin, &[1, 1]).unwrap_err(), GrmError::InvalidIndexSet(_)));
    assert!(matches!(puncture(&lin, &[2, 4]).unwrap_err(), GrmError::InvalidIndexSet(_)));
    let full = puncture(&lin, &[0, 1, 2, 3]).unwrap();
    assert_eq!(full, lin);
}

#[test]
fn puncturing_to_a_prefix_gives_the_shorter_code() {
    let spec = f(2, 1);
    let long = grm_make(&spec, 1, 3).unwrap();
    let short = grm_puncture_first(&long, 1).unwrap();
    assert_eq!(short.dimension(), 3);
    assert_eq!(short, grm_make(&spec, 1, 2).unwrap().as_linear());

    let spec3 = f(3, 1);
    let long3 = grm_make(&spec3, 1, 2).unwrap();
    let short3 = grm_puncture_first(&long3, 1).unwrap();
    assert_eq!(short3, grm_make(&spec3, 1, 1).unwrap().as_linear());

    assert_eq!(
        grm_puncture_first(&long, 3).unwrap_err(),
        GrmError::KTooLarge { k: 3, m: 3 }
    );
}

#[test]
fn prefix_truncation_covers_the_shorter_code_uniformly() {
    let spec = f(2, 1);
    let long = grm_make(&spec, 1, 3).unwrap().as_linear();
    let short = grm_make(&spec, 1, 2).unwrap().as_linear();
    let mut multiplicity: std::collections::HashMap<Vec<Elem>, usize> =
        std::collections::HashMap::new();
    for w in long.enumerate_codewords().unwrap() {
        *multiplicity.entry(w[..4].to_vec()).or_insert(0) += 1;
    }
    let short_words = words(&short);
    assert_eq!(multiplicity.keys().cloned().collect::<HashSet<_>>(), short_words);
    assert!(multiplicity.values().all(|&c| c == 2));
}

#[test]
fn clamped_prefix_puncture_of_a_high_degree_code() {
    let spec = f(2, 1);
    let long = grm_make(&spec, 2, 3).unwrap();
    let short = grm_puncture_first(&long, 1).unwrap();
    assert_eq!(short, grm_make(&spec, 2, 2).unwrap().as_linear());
    let full = grm_make(&spec, 3, 3).unwrap();
    let clipped = grm_puncture_first(&full, 2).unwrap();
    assert_eq!(clipped, grm_make(&spec, 1, 1).unwrap().as_linear());
}

#[test]
fn affine_identity_gives_identity_permutation() {
    let code = grm_make(&f(2, 1), 1, 2).unwrap();
    let a = vec![vec![1, 0], vec![0, 1]];
    let pi = affine_index_perm(&code, &a, &[0, 0]).unwrap();
    assert!(pi.is_identity());
}

#[test]
fn translations_and_linear_maps_are_automorphisms() {
    let code = grm_make(&f(2, 1), 1, 2).unwrap();
    let lin = code.as_linear();
    let eye = vec![vec![1, 0], vec![0, 1]];
    let shift = affine_index_perm(&code, &eye, &[1, 0]).unwrap();
    assert_eq!(shift.images(), &[1, 0, 3, 2]);
    assert!(is_automorphism(&lin, &shift));
    let mix = vec![vec![1, 1], vec![0, 1]];
    let pi = affine_index_perm(&code, &mix, &[0, 1]).unwrap();
    assert!(is_automorphism(&lin, &pi));

    let singular = vec![vec![1, 1], vec![1, 1]];
    assert_eq!(
        affine_index_perm(&code, &singular, &[0, 0]).unwrap_err(),
        GrmError::SingularMatrix
    );
}

#[test]
fn a_transposition_is_not_an_automorphism_at_length_eight() {
    let lin = grm_make(&f(2, 1), 1, 3).unwrap().as_linear();
    let mut images: Vec<usize> = (0..8).collect();
    images.swap(0, 1);
    let swap01 = Permutation::new(images).unwrap();
    assert!(!is_automorphism(&lin, &swap01));
}

/// Orbit of the ordered pair (0, 1) under the affine index permutations
/// generated by translations, one transvection, and one primitive scaling.
fn affine_pair_orbit(p: u32, e: u32, m: usize) -> (usize, usize) {
    let spec = f(p, e);
    let code = grm_make(&spec, 0, m).unwrap();
    let n = code.n;
    let mut gens: Vec<Permutation> = vec![];
    let mut eye = vec![vec![0; m]; m];
    for (j, row) in eye.iter_mut().enumerate() {
        row[j] = 1;
    }
    for j in 0..m {
        let mut b = vec![0; m];
        b[j] = 1;
        gens.push(affine_index_perm(&code, &eye, &b).unwrap());
    }
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let mut t = eye.clone();
            t[i][j] = 1;
            gens.push(affine_index_perm(&code, &t, &vec![0; m]).unwrap());
        }
    }
    let mut d = eye.clone();
    d[0][0] = spec.beta();
    gens.push(affine_index_perm(&code, &d, &vec![0; m]).unwrap());
    for g in gens.clone() {
        gens.push(g.inverse());
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([(0usize, 1usize)]);
    seen.insert((0, 1));
    while let Some((i, j)) = queue.pop_front() {
        for g in &gens {
            let next = (g.apply(i), g.apply(j));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    (seen.len(), n * (n - 1))
}

#[test]
fn affine_index_maps_act_doubly_transitively() {
    for (p, e, m) in [(2u32, 1u32, 2usize), (3, 1, 2), (2, 1, 3), (5, 1, 1), (2, 2, 1)] {
        let (orbit, full) = affine_pair_orbit(p, e, m);
        assert_eq!(orbit, full, "pair orbit for p={p} e={e} m={m}");
    }
}

#[test]
fn relabel_group_of_repetition_is_symmetric() {
    let lin = grm_make(&f(3, 1), 0, 2).unwrap().as_linear();
    let g = relabel_group(&lin).unwrap();
    assert_eq!(g.order(), 6);
}

#[test]
fn relabel_group_of_binary_even_weight_code() {
    let lin = grm_make(&f(2, 1), 1, 2).unwrap().as_linear();
    let g = relabel_group(&lin).unwrap();
    assert_eq!(g.order(), 2);
}

#[test]
fn relabel_group_of_affine_functions_is_the_affine_group() {
    let spec = f(5, 1);
    let lin = grm_make(&spec, 1, 1).unwrap().as_linear();
    let g = relabel_group(&lin).unwrap();
    assert_eq!(g.order(), 20);
    let affine = named_group(&spec, NamedGroup::Affine).unwrap();
    assert!(contains_subgroup(&g, &affine).unwrap());

    let small = grm_make(&f(3, 1), 1, 1).unwrap().as_linear();
    assert_eq!(relabel_group(&small).unwrap().order(), 6);
}

#[test]
fn relabel_search_is_capped() {
    let lin = grm_make(&f(7, 1), 0, 1).unwrap().as_linear();
    assert!(matches!(relabel_group(&lin).unwrap_err(), GrmError::TooLarge(_)));
}

#[test]
fn sampling_is_seed_deterministic_and_in_code() {
    let lin = grm_make(&f(3, 1), 1, 2).unwrap().as_linear();
    let a = sample_codeword(&lin, 7);
    let b = sample_codeword(&lin, 7);
    assert_eq!(a, b);
    for seed in 0..20 {
        assert!(lin.contains(&sample_codeword(&lin, seed)));
    }
    let basis = coset_basis(&lin).unwrap();
    let mut rng = ChaCha12Rng::seed_from_u64(11);
    for x0 in 0..3 {
        for _ in 0..10 {
            let w = basis.sample(x0, &mut rng);
            assert_eq!(w[0], x0);
            assert!(lin.contains(&w));
        }
    }
}

#[test]
fn json_round_trip_and_validation() {
    let code = grm_make(&f(3, 1), 1, 2).unwrap();
    let text = code.to_json();
    let back = GrmCode::from_json(&text).unwrap();
    assert_eq!(back, code);

    let tampered = text.replacen("\"r\": 1", "\"r\": 2", 1);
    assert!(matches!(GrmCode::from_json(&tampered).unwrap_err(), GrmError::BadFile(_)));
    let bad_q = r#"{"q": 6, "r": 0, "m": 1, "generator": ["111111"]}"#;
    assert!(matches!(GrmCode::from_json(bad_q).unwrap_err(), GrmError::BadFile(_)));
}

#[test]
fn encode_and_contains_agree() {
    let spec = f(2, 2);
    let lin = grm_make(&spec, 1, 1).unwrap().as_linear();
    let en = enumerate(spec.q, lin.dimension()).unwrap();
    for i in 0..en.size {
        assert!(lin.contains(&lin.encode(&en.index_to_vec(i))));
    }
    assert!(!lin.contains(&[1, 0, 0, 1]));
    assert_eq!(words(&lin).len(), 16);
}
