use rnc_core::arrangements::{
    generic_hilbert, ideal_dimension, ideal_dimension_with, sample_shape, ComponentShape,
    Configuration, HilbertOptions, RankBackend,
};
use rnc_core::arrangements::rank::{bareiss_rank, modular_rank, random_primes};
use rnc_core::arrangements::condition_matrix;
use rnc_core::exactgeom::{LinearSubspace, ProjPoint, Projectivity, Rng};

fn shape(parts: &[(usize, usize, usize)]) -> Vec<ComponentShape> {
    parts
        .iter()
        .flat_map(|&(count, dim, mult)| std::iter::repeat_n(ComponentShape { dim, mult }, count))
        .collect()
}

#[test]
fn two_codim_three_spaces() {
    for (n, want) in [(4, 6), (5, 12), (6, 19), (7, 27), (8, 36)] {
        let ev = generic_hilbert(n, &shape(&[(2, n - 3, 1)]), 2, 1, &HilbertOptions::default()).unwrap();
        assert_eq!(ev.hf, want, "n = {n}");
        assert!(ev.seeds_agreed);
        if n >= 6 {
            assert_eq!(ev.hf, (n * n + 3 * n - 16) / 2);
        }
    }
}

#[test]
fn fat_double_point_and_triple_spaces() {
    for (m, want) in [(1usize, 12usize), (2, 27), (3, 48)] {
        let n = 2 * m + 1;
        let w = shape(&[(1, 0, 2), (2, m - 1, 3)]);
        let ev = generic_hilbert(n, &w, 4, 7, &HilbertOptions::default()).unwrap();
        assert_eq!(ev.ideal_dim, want, "m = {m}");
        assert_eq!(want, 3 * (m + 1) * (m + 1));
    }
}

#[test]
fn coordinate_skew_lines_monomial_oracle() {
    // The ideal of {x0=x1=0} ∪ {x2=x3=0} in degree 2 is spanned by x_i x_j, i∈{0,1}, j∈{2,3}.
    let a = LinearSubspace::coordinate(3, &[2, 3]);
    let b = LinearSubspace::coordinate(3, &[0, 1]);
    let c = Configuration::reduced(3, vec![a, b]).unwrap();
    assert_eq!(ideal_dimension(&c, 2), 4);
    let mut rng = Rng::with_height(5, 30);
    for _ in 0..10 {
        let g = loop {
            if let Ok(g) = Projectivity::new((0..4).map(|_| rng.vector(4)).collect()) {
                break g;
            }
        };
        assert_eq!(ideal_dimension(&c.apply(&g), 2), 4);
    }
}

#[test]
fn projectivity_invariance_of_samples() {
    let mut rng = Rng::new(17);
    let cfg = sample_shape(5, &shape(&[(2, 2, 1), (3, 0, 1)]), &mut rng).unwrap();
    let base = ideal_dimension(&cfg, 2);
    for _ in 0..10 {
        let g = loop {
            if let Ok(g) = Projectivity::new((0..6).map(|_| rng.vector(6)).collect()) {
                break g;
            }
        };
        assert_eq!(ideal_dimension(&cfg.apply(&g), 2), base);
    }
}

#[test]
fn modular_ranks_match_exact() {
    let mut rng = Rng::new(23);
    let cfg = sample_shape(4, &shape(&[(2, 1, 1), (4, 0, 1)]), &mut rng).unwrap();
    let cm = condition_matrix(&cfg, 3);
    let exact = bareiss_rank(&cm.rows);
    for p in random_primes(99, 3) {
        assert_eq!(modular_rank(&cm.rows, p), exact);
    }
    let m = ideal_dimension_with(&cfg, 3, &HilbertOptions { backend: RankBackend::Modular, ..Default::default() });
    assert_eq!(m.rank, exact);
}

#[test]
fn adding_components_never_grows_the_ideal() {
    let mut rng = Rng::new(31);
    let mut cfg = Configuration::reduced(4, vec![]).unwrap();
    let mut last = ideal_dimension(&cfg, 3);
    for dim in [2, 0, 1, 0, 2, 1, 0] {
        let space = rnc_core::exactgeom::sample_generic_subspace(4, dim, &mut rng);
        cfg = cfg.with_component(rnc_core::arrangements::Component::reduced(space)).unwrap();
        let now = ideal_dimension(&cfg, 3);
        assert!(now <= last);
        last = now;
    }
    let p = ProjPoint::from_ints(&[1, 2, 3, 4, 5]).unwrap();
    let cfg = cfg.with_component(rnc_core::arrangements::Component::fat(LinearSubspace::from_point(&p), 2)).unwrap();
    assert!(ideal_dimension(&cfg, 3) <= last);
}
