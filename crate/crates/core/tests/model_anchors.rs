//! Cross-validation anchors: specific reference coordinates, edges, and
//! planes of the models, plus the exact duality between the 120- and
//! 600-cell models.

use std::collections::BTreeSet;

use polyharmonic_core::cache::{group_for, model_for};
use polyharmonic_core::exact::{ExactScalar, ExactVec4, Quaternion};
use polyharmonic_core::polytope::{enumerate_facets, PolytopeKind};
use polyharmonic_core::symmetry::{edge_stabilizer, in_plane, plane_edge_partition, Rotor};

#[test]
fn cell120_is_the_scaled_dual_of_cell600() {
    // Facet centroids of the 600-cell, scaled by (3 - sqrt5), reproduce the
    // seven-family vertex set exactly.
    let p600 = model_for(PolytopeKind::Cell600).unwrap();
    let p120 = model_for(PolytopeKind::Cell120).unwrap();
    let facets = enumerate_facets(&p600).unwrap();
    let scale = ExactScalar::from_int(3) - ExactScalar::sqrt5();
    let dual: BTreeSet<ExactVec4> = facets
        .iter()
        .map(|f| {
            let mut sum = ExactVec4::zero();
            for &v in f {
                sum = &sum + &p600.vertices[v];
            }
            sum.scale(&scale)
        })
        .collect();
    let model: BTreeSet<ExactVec4> = p120.vertices.iter().cloned().collect();
    assert_eq!(dual, model);
}

#[test]
fn cell120_reference_edge_and_plane() {
    // u = (2,2,0,0) and v = (sqrt5, phi, 0, phi^-1) span an edge whose plane
    // carries exactly 12 vertices and 6 edges of the 120-cell.
    let poly = model_for(PolytopeKind::Cell120).unwrap();
    let u = ExactVec4([
        ExactScalar::from_int(2),
        ExactScalar::from_int(2),
        ExactScalar::zero(),
        ExactScalar::zero(),
    ]);
    let v = ExactVec4([
        ExactScalar::sqrt5(),
        ExactScalar::phi(),
        ExactScalar::zero(),
        ExactScalar::phi_inv(),
    ]);
    let ui = poly.vertex_index(&u).expect("u is a vertex");
    let vi = poly.vertex_index(&v).expect("v is a vertex");
    assert!(poly.has_edge(ui, vi));
    let d2 = (&u - &v).norm_sq();
    assert_eq!(d2, poly.edge_length_sq);
    let part = plane_edge_partition(&poly).unwrap();
    let class = part
        .classes
        .iter()
        .find(|c| c.vertices.contains(&ui) && c.vertices.contains(&vi))
        .expect("plane class exists");
    assert_eq!(class.vertices.len(), 12);
    assert_eq!(class.edges.len(), 6);
    assert!(!class.closed_polygon);
}

#[test]
fn cell120_adq_fixed_edge() {
    // Ad_q fixes the edge [(sqrt5,1,1,1), (phi^2, phi^-1, phi^-1, phi^-1)]
    // pointwise; its stabilizer is cyclic of order 3.
    let poly = model_for(PolytopeKind::Cell120).unwrap();
    let group = group_for(PolytopeKind::Cell120).unwrap();
    let one = ExactScalar::one();
    let a = ExactVec4([
        ExactScalar::sqrt5(),
        one.clone(),
        one.clone(),
        one.clone(),
    ]);
    let phi = ExactScalar::phi();
    let phi2 = &phi * &phi;
    let b = ExactVec4([
        phi2,
        ExactScalar::phi_inv(),
        ExactScalar::phi_inv(),
        ExactScalar::phi_inv(),
    ]);
    let ai = poly.vertex_index(&a).expect("vertex");
    let bi = poly.vertex_index(&b).expect("vertex");
    assert!(poly.has_edge(ai, bi));
    let adq = Rotor::adjoint(&Quaternion::hurwitz_q()).unwrap();
    assert_eq!(adq.apply(&a), a);
    assert_eq!(adq.apply(&b), b);
    let stab = edge_stabilizer(&group, &poly, (ai, bi)).unwrap();
    assert_eq!(stab.order, 3);
    let adq_idx = group.index_of(&adq).expect("Ad_q in the group");
    assert!(stab.elements.contains(&adq_idx));
}

#[test]
fn cell600_decagon_through_one_and_p() {
    // The plane of the edge [1, p] meets the vertex set in the ten powers
    // +/- p^k, forming a regular decagon whose sides are the plane's edges.
    let poly = model_for(PolytopeKind::Cell600).unwrap();
    let p = Quaternion::icosian_p();
    let mut expected = BTreeSet::new();
    let mut power = Quaternion::one();
    for _ in 0..5 {
        expected.insert(poly.vertex_index(&ExactVec4::from_quaternion(&power)).unwrap());
        expected.insert(
            poly.vertex_index(&ExactVec4::from_quaternion(&(-&power)))
                .unwrap(),
        );
        power = &power * &p;
    }
    assert_eq!(expected.len(), 10);
    let part = plane_edge_partition(&poly).unwrap();
    let one_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&Quaternion::one()))
        .unwrap();
    let p_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&p))
        .unwrap();
    let class = part
        .classes
        .iter()
        .find(|c| c.vertices.contains(&one_idx) && c.vertices.contains(&p_idx))
        .expect("decagon plane exists");
    let found: BTreeSet<usize> = class.vertices.iter().copied().collect();
    assert_eq!(found, expected);
    assert_eq!(class.edges.len(), 10);
    assert!(class.closed_polygon);
}

#[test]
fn cell600_stabilizer_of_reference_edge_is_generated_by_ad_p() {
    let poly = model_for(PolytopeKind::Cell600).unwrap();
    let group = group_for(PolytopeKind::Cell600).unwrap();
    let one_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&Quaternion::one()))
        .unwrap();
    let p_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&Quaternion::icosian_p()))
        .unwrap();
    let stab = edge_stabilizer(&group, &poly, (one_idx, p_idx)).unwrap();
    let adp = Rotor::adjoint(&Quaternion::icosian_p()).unwrap();
    let adp_idx = group.index_of(&adp).expect("Ad_p in the group");
    assert!(stab.elements.contains(&adp_idx));
    // The stabilizer is exactly the powers of Ad_p.
    let mut powers = BTreeSet::new();
    let mut acc = group.identity_index();
    for _ in 0..5 {
        powers.insert(acc);
        acc = group.multiply(adp_idx, acc);
    }
    let members: BTreeSet<usize> = stab.elements.iter().copied().collect();
    assert_eq!(powers, members);
}

#[test]
fn cell8_adq_fixes_the_two_diagonal_edges() {
    // Ad_q fixes exactly [V1, V9] and [V8, V16] pointwise (1-based labels).
    let poly = model_for(PolytopeKind::Cell8).unwrap();
    let adq = Rotor::adjoint(&Quaternion::hurwitz_q()).unwrap();
    let fixed_edges: Vec<(usize, usize)> = poly
        .edges
        .iter()
        .copied()
        .filter(|&(u, v)| {
            adq.apply(&poly.vertices[u]) == poly.vertices[u]
                && adq.apply(&poly.vertices[v]) == poly.vertices[v]
        })
        .collect();
    assert_eq!(fixed_edges, vec![(0, 8), (7, 15)]);
}

#[test]
fn ad_q_fixed_plane_spans_reference_edges_on_all_adq_kinds() {
    // The fixed plane span{1, i+j+k} carries the reference edge of the
    // 5-, 8-, 24-, and 120-cell models.
    let adq = Rotor::adjoint(&Quaternion::hurwitz_q()).unwrap();
    let basis_holder = polyharmonic_core::symmetry::fixed_plane(&adq).unwrap();
    let basis = basis_holder.plane_basis().unwrap();
    for kind in [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell120,
    ] {
        let poly = model_for(kind).unwrap();
        let fixed: Vec<usize> = (0..poly.vertices.len())
            .filter(|&i| in_plane(basis, &poly.vertices[i]))
            .collect();
        // Some fixed edge exists within the plane.
        let has_edge = fixed
            .iter()
            .any(|&u| fixed.iter().any(|&v| u < v && poly.has_edge(u, v)));
        assert!(has_edge, "{kind}");
    }
}
