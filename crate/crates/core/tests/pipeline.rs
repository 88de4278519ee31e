use overdet::charvar::{char_variety, classify, removability_query, Classification, Removability};
use overdet::flagcover::{catalog_polytope, enumerate_flags, face_lattice, radius_chain, FlagSetup};
use overdet::groebner::{buchberger, krull_dim, syzygies, Ideal, ModuleOrder, MonomialOrder};
use overdet::omega::{build_omega, omega_positivity};
use overdet::poly::rat;
use overdet::report::{analyze_catalog, AnalysisOptions};
use overdet::resolution::{build_resolution, dualize, ext_vanishing, Homology};
use overdet::symbol::{ellipticity_check, EllipticityReport, Tier};
use overdet::{parse, GaussPoly, GaussRational, ShiftedMatrix};

fn poly(n: usize, s: &str) -> GaussPoly {
    parse(&format!("vars {n}; unknowns 1; eq {s};")).unwrap().entries[0][0].clone()
}

fn system(src: &str) -> ShiftedMatrix {
    ShiftedMatrix::from_spec(&parse(src).unwrap()).unwrap()
}

const CR2: &str = "vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;";

#[test]
fn gaussian_product_and_evaluation() {
    let p = &poly(2, "d1 + i*d2") * &poly(2, "d1 - i*d2");
    assert_eq!(p, poly(2, "d1^2 + d2^2"));
    let at = p.eval(&[GaussRational::from_int(1), GaussRational::i()]).unwrap();
    assert_eq!(at, GaussRational::from_int(0));
}

#[test]
fn lower_order_terms_are_stripped() {
    let m = system("vars 2; unknowns 2; shifts sigma = [2]; rho = [0, 1]; eq d1^2 + d2, d2;");
    let p0 = m.principal_part();
    assert_eq!(p0.entry(0, 0), &poly(2, "d1^2"));
    assert_eq!(p0.entry(0, 1), &poly(2, "d2"));
}

#[test]
fn adjoint_is_an_involution() {
    let m = system(CR2);
    let adj = m.adjoint_symbol().unwrap();
    assert_eq!(adj.entry(0, 0), &poly(4, "-d1 + i*d2"));
    assert_eq!(adj.adjoint_symbol().unwrap().rows(), m.rows());
}

#[test]
fn cr_initial_ideal_under_lex() {
    let gens = vec![vec![poly(4, "d1 + i*d2")], vec![poly(4, "d3 + i*d4")]];
    let gb = buchberger(&gens, &ModuleOrder::ideal(MonomialOrder::Lex));
    let mut lead: Vec<String> = gb.leading_terms().iter().map(|(m, _)| format!("{:?}", m.0)).collect();
    lead.sort();
    assert_eq!(lead, vec!["[0, 0, 1, 0]", "[1, 0, 0, 0]"]);
    let nf = gb.normal_form(&[poly(4, "d2^4")]);
    assert_eq!(nf.remainder[0], poly(4, "d2^4"));
}

#[test]
fn dimensions() {
    assert_eq!(krull_dim(&Ideal::new(3, vec![poly(3, "d1"), poly(3, "d2"), poly(3, "d3")]), MonomialOrder::Grevlex), 0);
    assert_eq!(krull_dim(&Ideal::new(4, vec![poly(4, "d1 + i*d2"), poly(4, "d3 + i*d4")]), MonomialOrder::Lex), 2);
    assert_eq!(krull_dim(&Ideal::new(2, vec![poly(2, "d1^2 + d2^2")]), MonomialOrder::Grevlex), 1);
    assert_eq!(krull_dim(&Ideal::new(2, vec![poly(2, "1")]), MonomialOrder::Grevlex), -1);
}

#[test]
fn cr_syzygy_and_resolution() {
    let m = system(CR2);
    let q = syzygies(&m).unwrap();
    assert_eq!(q.nrows(), 1);
    assert_eq!(q.row_shifts().0, vec![2]);
    assert!(q.mul(&m).unwrap().is_zero());
    let res = build_resolution(&m, 4).unwrap();
    assert_eq!(res.ranks(), vec![1, 2, 1]);
    let dual = dualize(&res).unwrap();
    let h = ext_vanishing(&dual, 2).unwrap();
    assert!(h.entries[0].is_trivial() && h.entries[1].is_trivial());
    assert!(matches!(h.entries[2], Homology::Nontrivial { .. }));
}

#[test]
fn unit_presentation_has_no_syzygies() {
    let m = system("vars 2; unknowns 1; shifts sigma = [0]; rho = [0]; eq 1;");
    assert_eq!(build_resolution(&m, 2).unwrap().ranks(), vec![1, 1]);
}

#[test]
fn ellipticity_and_classification() {
    let wave = system("vars 2; unknowns 1; eq d1^2 - d2^2;");
    match ellipticity_check(std::slice::from_ref(&wave), 100, 3, Tier::Exact).unwrap() {
        EllipticityReport::NotElliptic { witness, .. } => assert_eq!(witness, vec![rat(1, 1), rat(1, 1)]),
        other => panic!("{other:?}"),
    }
    let cr = system(CR2);
    let e = ellipticity_check(std::slice::from_ref(&cr), 100, 3, Tier::Exact).unwrap();
    assert_eq!(e.tier_name(), "EllipticCertified");
    let v = classify(&char_variety(&cr).unwrap(), &e);
    assert_eq!(v.classification, Classification::Overdetermined);
    assert_eq!(removability_query(&v, 0), Removability::Removable);
}

#[test]
fn omega_for_cr_is_definite_and_bounded() {
    let p = system(CR2);
    let q = syzygies(&p).unwrap();
    let o = build_omega(&p, Some(&q)).unwrap();
    assert_eq!(o.size(), 2);
    assert!(o.is_hermitian() && o.degree_bound_holds());
    let v = [GaussRational::from_int(1), GaussRational::from_int(0)];
    let xi = [rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
    assert!(o.quadratic_form(&xi, &v).re > rat(0, 1));
    let zero = [GaussRational::from_int(0), GaussRational::from_int(0)];
    assert_eq!(o.quadratic_form(&xi, &zero), GaussRational::from_int(0));
    assert!(omega_positivity(&o, 50, 1).positive());
}

#[test]
fn single_cr_operator_gives_the_laplacian() {
    let o = build_omega(&system("vars 2; unknowns 1; eq d1 + i*d2;"), None).unwrap();
    assert_eq!(o.matrix[0][0], poly(2, "d1^2 + d2^2"));
}

#[test]
fn flags_of_the_triangle() {
    let (tri, _) = catalog_polytope("triangle").unwrap();
    let lat = face_lattice(&tri);
    assert_eq!((lat.count(0), lat.count(1), lat.count(2)), (3, 3, 1));
    assert_eq!(enumerate_flags(&lat, 1).len(), 3);
    assert_eq!(enumerate_flags(&lat, 0).len(), 6);
}

#[test]
fn broken_partition_is_detected() {
    let (seg, b) = catalog_polytope("segment").unwrap();
    let h = &b / rat(8, 1);
    let setup = FlagSetup::new(seg, b, h).unwrap();
    let mut parts = setup.partitions().unwrap();
    assert!(setup.telescope_check(&parts, &setup.constant_v0()).residuals_zero());
    parts[0] = parts[0].scaled(0, &rat(1, 2));
    assert!(!setup.telescope_check(&parts, &setup.constant_v0()).residuals_zero());
}

#[test]
fn radius_inequality() {
    assert!(radius_chain(2, 2, &rat(1, 8)).inequality_holds);
    assert!(!radius_chain(1, 2, &rat(1, 2)).inequality_holds);
    // equality at c = 1/6 counts as holding
    assert!(radius_chain(1, 2, &rat(1, 6)).inequality_holds);
}

#[test]
fn catalog_reports_are_consistent() {
    let opts = AnalysisOptions { omega: false, flagcover: false, query_dims: vec![0, 1], ..AnalysisOptions::default() };
    let r = analyze_catalog("cr2", &opts).unwrap();
    assert_eq!((r.m, r.verdict.max_removable_submanifold_dim), (2, 0));
    assert!(r.invariants.iter().all(|i| i.holds != Some(false)));
    let l = analyze_catalog("laplace2", &opts).unwrap();
    assert_eq!(l.verdict.classification, Classification::Determined);
    assert!(!l.verdict.compact_removable);
}
