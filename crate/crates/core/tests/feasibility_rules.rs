use rnc_core::arrangements::{
    hilbert_function, sample_configuration, Component, Configuration, WeightVector,
};
use rnc_core::exactgeom::{LinearSubspace, ProjPoint, Rng};
use rnc_core::feasibility::*;
use rnc_core::rnc::standard_rnc;
use rnc_core::Error;

fn w(n: usize, s: &str) -> WeightVector {
    WeightVector::parse(n, s).unwrap()
}

fn status(r: Option<(Status, Certificate)>) -> Option<Status> {
    r.map(|x| x.0)
}

#[test]
fn counting_and_parameter_count() {
    assert_eq!(status(check_counting(&w(3, "6,0"))), Some(Status::Feasible));
    assert_eq!(check_counting(&w(3, "5,1")), None);
    assert_eq!(status(check_counting(&w(4, "0,0,0"))), Some(Status::Feasible));
    assert_eq!(
        check_parameter_count(&w(5, "0,6,0,0")),
        Some((Status::NonFeasible, Certificate::ParameterCount { lhs: 36, rhs: 32 }))
    );
    assert_eq!(check_parameter_count(&w(3, "4,2")), None);
    assert_eq!(check_parameter_count(&w(4, "0,0,0")), None);
}

#[test]
fn codim2_and_segre_tables() {
    assert_eq!(status(check_codim2_table(&w(3, "5,1"))), Some(Status::Feasible));
    assert_eq!(status(check_codim2_table(&w(3, "4,2"))), Some(Status::NonFeasible));
    assert_eq!(status(check_codim2_table(&w(4, "2,0,5"))), Some(Status::Feasible));
    for p in 0..=7 {
        let want = if p <= 5 { Status::Feasible } else { Status::NonFeasible };
        assert_eq!(status(check_segre_iff(&w(5, &format!("{p},1,1,0")))), Some(want), "p = {p}");
    }
    for n in 3..8 {
        let mut c = vec![0; n - 1];
        c[0] = n + 2;
        c[n - 2] = 1;
        assert_eq!(status(check_segre_iff(&WeightVector::new(n, c).unwrap())), Some(Status::Feasible));
    }
}

#[test]
fn homogeneous_tables() {
    for l in 1..=8 {
        let want = if l <= 6 { Status::Feasible } else { Status::NonFeasible };
        assert_eq!(status(check_homogeneous(&w(3, &format!("0,{l}")))), Some(want));
    }
    assert_eq!(status(check_homogeneous(&w(5, "1,1,1,1"))), Some(Status::Feasible));
    assert_eq!(status(check_homogeneous(&w(5, "0,5,0,0"))), Some(Status::Unknown));
    assert_eq!(status(check_homogeneous(&w(7, "0,6,0,0,0,0"))), Some(Status::Unknown));
    assert_eq!(status(check_homogeneous(&w(4, "1,1,0"))), None);
}

/// Recomputes the Hilbert values of a Bezout certificate from its seeds.
fn recheck_bezout(l: &WeightVector, cert: &Certificate) {
    let Certificate::BezoutWitness { d, k, gamma_index, h_lambda, h_lambda_prime, binomial, incidence, dn, seeds, .. } =
        cert
    else {
        panic!("not a Bezout certificate: {cert:?}");
    };
    assert_eq!(*incidence, l.incidence_sum() - 1);
    assert_eq!(*dn, d * l.n());
    assert!(incidence > dn);
    assert_eq!(*binomial, rnc_core::poly::binomial(d + k, *k));
    for (j, &s) in seeds.iter().enumerate() {
        let cfg = sample_configuration(l, &mut Rng::new(s)).unwrap();
        assert_eq!(cfg.components()[*gamma_index].dim(), *k);
        let mut comps = cfg.components().to_vec();
        comps.remove(*gamma_index);
        let sub = Configuration::new(l.n(), comps).unwrap();
        assert_eq!(hilbert_function(&cfg, *d), h_lambda[j]);
        assert_eq!(hilbert_function(&sub, *d), h_lambda_prime[j]);
        assert_eq!(h_lambda[j], h_lambda_prime[j] + binomial);
    }
}

#[test]
fn bezout_examples_and_recomputation() {
    let opts = ClassifyOptions::default();
    let cases = [(w(4, "0,5,0"), 2, 1), (w(5, "4,0,0,2"), 2, 0), (w(6, "4,0,0,0,2"), 2, 0)];
    for (l, d0, k0) in cases {
        let (st, cert) = check_bezout(&l, opts.d_max, opts.seed).unwrap().expect("Bezout applies");
        assert_eq!(st, Status::NonFeasible);
        let Certificate::BezoutWitness { d, k, .. } = &cert else { unreachable!() };
        assert_eq!((*d, *k), (d0, k0), "{l}");
        recheck_bezout(&l, &cert);
    }
}

#[test]
fn projection_chains() {
    let eng = Classifier::new(ClassifyOptions::default());
    let (st, cert) = eng.projection(&w(5, "6,1,1,0")).unwrap().expect("projection applies");
    assert_eq!(st, Status::NonFeasible);
    let Certificate::ProjectionChain { steps, child } = cert else { panic!() };
    assert_eq!(steps.len(), 1);
    assert!(matches!(*child, Certificate::ParameterCount { .. } | Certificate::SegreIff { .. }));
    let shallow = Classifier::new(ClassifyOptions { depth: 0, ..Default::default() });
    assert_eq!(shallow.projection(&w(5, "6,1,1,0")).unwrap(), None);
    let kids: Vec<WeightVector> = projection_children(&w(4, "1,1,0")).into_iter().map(|x| x.1).collect();
    assert_eq!(kids, vec![w(2, "1"), w(3, "0,1")]);
}

#[test]
fn classify_examples() {
    let opts = ClassifyOptions::default();
    let v = classify(&w(5, "5,1,1,0"), &opts).unwrap();
    assert_eq!((v.status, v.certificate.rule_name()), (Status::Feasible, "SegreIff"));
    let v = classify(&w(6, "0,3,0,2,0"), &opts).unwrap();
    assert_eq!((v.status, v.certificate.rule_name()), (Status::NonFeasible, "BezoutWitness"));
    recheck_bezout(&v.weight, &v.certificate);
    let v = classify(&w(6, "1,1,1,1,1"), &opts).unwrap();
    assert_eq!(v.status, Status::Unknown);
    let v = classify(&w(3, "5,1"), &opts).unwrap();
    assert_eq!(v.certificate.rule_name(), "Codim2Table");
}

#[test]
fn classify_is_deterministic_and_round_trips() {
    let opts = ClassifyOptions { seed: 9, ..Default::default() };
    for l in [w(4, "0,5,0"), w(5, "2,1,1,1"), w(3, "3,2")] {
        let a = classify(&l, &opts).unwrap();
        let b = classify(&l, &opts).unwrap();
        assert_eq!(a, b);
        let back: Verdict = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.certificate.digest(), a.certificate.digest());
    }
}

#[test]
fn veronese_and_segre_witnesses() {
    for n in 2..=6 {
        let mut c = vec![0; n - 1];
        c[0] = n + 3;
        let l = WeightVector::new(n, c).unwrap();
        let wit = build_witness(&l, 3).unwrap();
        assert!(verify_witness(&wit.curve, &wit.configuration).unwrap().ok);
    }
    for (n, s) in [(5, "5,1,1,0"), (4, "0,4,0"), (6, "0,5,0,0,0"), (5, "1,1,1,1"), (4, "5,0,1")] {
        let l = w(n, s);
        let wit = build_witness(&l, 11).unwrap();
        assert_eq!(wit.weight, l);
        assert!(verify_witness(&wit.curve, &wit.configuration).unwrap().ok, "{l}");
        let back: Witness = serde_json::from_str(&serde_json::to_string(&wit).unwrap()).unwrap();
        assert_eq!(back, wit);
    }
    assert!(matches!(build_witness(&w(4, "8,0,0"), 0), Err(Error::NoConstructivePath(_))));
}

#[test]
fn verify_against_hand_configurations() {
    let c = standard_rnc(3);
    let plane = LinearSubspace::coordinate(3, &[1, 2, 3]);
    let cfg = Configuration::reduced(3, vec![plane]).unwrap();
    assert!(verify_witness(&c, &cfg).unwrap().ok);
    let line = LinearSubspace::coordinate(3, &[2, 3]);
    let p = LinearSubspace::from_point(&ProjPoint::from_ints(&[1, 1, 1, 1]).unwrap());
    let cfg = Configuration::reduced(3, vec![line, p]).unwrap();
    assert!(verify_witness(&c, &cfg).unwrap().ok);
    let off = LinearSubspace::from_point(&ProjPoint::from_ints(&[1, 2, 3, 5]).unwrap());
    let cfg = Configuration::reduced(3, vec![off]).unwrap();
    let rep = verify_witness(&c, &cfg).unwrap();
    assert!(!rep.ok);
    assert_eq!(rep.components[0].got, Some(0));
    let fat = Configuration::new(3, vec![Component::fat(LinearSubspace::coordinate(3, &[0]), 2)]).unwrap();
    assert_eq!(verify_witness(&c, &fat).unwrap_err(), Error::FatComponentPresent);
}

#[test]
fn atlas_small_cases() {
    let opts = ClassifyOptions::default();
    let a = atlas(3, &opts).unwrap();
    let get = |s: &str| a.rows.iter().find(|r| r.weight == w(3, s)).unwrap().status;
    assert_eq!(get("4,2"), Status::NonFeasible);
    for (p, l) in [(6, 0), (5, 1), (3, 3), (2, 4), (1, 5)] {
        assert_eq!(get(&format!("{p},{l}")), Status::Feasible);
    }
    for l in 0..=6 {
        assert_eq!(get(&format!("0,{l}")), Status::Feasible);
    }
    assert_eq!(a.counts.feasible + a.counts.non_feasible + a.counts.unknown, a.rows.len());
    let csv = a.to_csv();
    assert!(csv.starts_with("l0,l1,status,rule,certificate_sha256\n"));
    assert!(csv.contains("\n4,2,NonFeasible,"));
    let back: Atlas = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    assert_eq!(back, a);
}
