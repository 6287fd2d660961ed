//! Group orders, edge-fixing censuses, and plane partitions across all five
//! admissible kinds, checked against the published counts.

use std::collections::HashSet;

use polyharmonic_core::cache::{group_for, model_for};
use polyharmonic_core::exact::{ExactVec4, Quaternion};
use polyharmonic_core::polytope::PolytopeKind;
use polyharmonic_core::symmetry::{
    census_edge_fixing, edge_orbit_size, edge_stabilizer, fixed_plane, in_plane,
    plane_edge_partition, setwise_edge_stabilizer_order, transitivity_report, FixedSpace,
};

#[test]
fn group_orders() {
    let expected = [
        (PolytopeKind::Cell5, 60),
        (PolytopeKind::Cell8, 192),
        (PolytopeKind::Cell24, 576),
        (PolytopeKind::Cell120, 7200),
        (PolytopeKind::Cell600, 7200),
    ];
    for (kind, order) in expected {
        let g = group_for(kind).unwrap();
        assert_eq!(g.order(), order, "{kind}");
    }
}

#[test]
fn edge_fixing_censuses() {
    let expected = [
        (PolytopeKind::Cell5, 3usize, 20usize),
        (PolytopeKind::Cell8, 3, 32),
        (PolytopeKind::Cell24, 3, 32),
        (PolytopeKind::Cell120, 3, 400),
        (PolytopeKind::Cell600, 5, 288),
    ];
    for (kind, m, count) in expected {
        let poly = model_for(kind).unwrap();
        let group = group_for(kind).unwrap();
        assert_eq!(census_edge_fixing(&group, &poly, m), count, "{kind}");
    }
}

#[test]
fn plane_partitions() {
    // (kind, plane count, edges per plane, closed polygon?)
    let expected = [
        (PolytopeKind::Cell24, 16usize, 6usize, true),
        (PolytopeKind::Cell120, 200, 6, false),
        (PolytopeKind::Cell600, 72, 10, true),
    ];
    for (kind, planes, per_plane, closed) in expected {
        let poly = model_for(kind).unwrap();
        let part = plane_edge_partition(&poly).unwrap();
        assert_eq!(part.classes.len(), planes, "{kind} planes");
        assert_eq!(part.edges_per_plane, per_plane, "{kind} edges per plane");
        for c in &part.classes {
            assert_eq!(c.closed_polygon, closed, "{kind} plane structure");
        }
    }
    // The 120-cell planes carry 12 vertices each; the 600-cell decagons 10.
    let p120 = model_for(PolytopeKind::Cell120).unwrap();
    for c in &plane_edge_partition(&p120).unwrap().classes {
        assert_eq!(c.vertices.len(), 12);
    }
    let p600 = model_for(PolytopeKind::Cell600).unwrap();
    for c in &plane_edge_partition(&p600).unwrap().classes {
        assert_eq!(c.vertices.len(), 10);
    }
}

#[test]
fn census_matches_plane_count_times_m_minus_one() {
    let cases = [
        (PolytopeKind::Cell24, 3usize),
        (PolytopeKind::Cell120, 3),
        (PolytopeKind::Cell600, 5),
    ];
    for (kind, m) in cases {
        let poly = model_for(kind).unwrap();
        let group = group_for(kind).unwrap();
        let part = plane_edge_partition(&poly).unwrap();
        assert_eq!(
            census_edge_fixing(&group, &poly, m),
            part.classes.len() * (m - 1),
            "{kind}"
        );
    }
}

#[test]
fn orbit_stabilizer_on_edges() {
    for kind in PolytopeKind::ADMISSIBLE {
        let poly = model_for(kind).unwrap();
        let group = group_for(kind).unwrap();
        let edge = poly.edges[0];
        let orbit = edge_orbit_size(&group, edge);
        let setwise = setwise_edge_stabilizer_order(&group, edge);
        assert_eq!(orbit * setwise, group.order(), "{kind}");
        assert_eq!(orbit, poly.edges.len(), "{kind} edge transitivity");
    }
}

#[test]
fn reference_edge_stabilizers() {
    // 5-cell [V1, V2]: cyclic of order 3 generated by Ad_q.
    let poly = model_for(PolytopeKind::Cell5).unwrap();
    let group = group_for(PolytopeKind::Cell5).unwrap();
    let stab = edge_stabilizer(&group, &poly, (0, 1)).unwrap();
    assert_eq!(stab.order, 3);

    // 24-cell [1, q]: order 3.
    let poly = model_for(PolytopeKind::Cell24).unwrap();
    let group = group_for(PolytopeKind::Cell24).unwrap();
    let q_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&Quaternion::hurwitz_q()))
        .unwrap();
    let stab = edge_stabilizer(&group, &poly, (0, q_idx)).unwrap();
    assert_eq!(stab.order, 3);

    // 600-cell [1, p]: cyclic of order 5, generated by Ad_p up to inversion.
    let poly = model_for(PolytopeKind::Cell600).unwrap();
    let group = group_for(PolytopeKind::Cell600).unwrap();
    let one_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&Quaternion::one()))
        .unwrap();
    let p_idx = poly
        .vertex_index(&ExactVec4::from_quaternion(&Quaternion::icosian_p()))
        .unwrap();
    let stab = edge_stabilizer(&group, &poly, (one_idx, p_idx)).unwrap();
    assert_eq!(stab.order, 5);
    // All four nontrivial members are powers of the generator, rotating by
    // 2 pi k / 5; their orders are all 5.
    for &e in &stab.elements {
        let ord = group.element_order(e);
        assert!(ord == 1 || ord == 5);
    }
}

#[test]
fn edge_fixing_elements_fix_exactly_the_edge_plane() {
    // For each admissible kind, the stabilizer generator of a reference edge
    // has fixed plane exactly span{u, v}.
    for kind in PolytopeKind::ADMISSIBLE {
        let poly = model_for(kind).unwrap();
        let group = group_for(kind).unwrap();
        let (u, v) = poly.edges[0];
        let stab = edge_stabilizer(&group, &poly, (u, v)).unwrap();
        let gen = &group.elements[stab.generator];
        let fs = fixed_plane(gen).unwrap();
        let basis = fs.plane_basis().expect("stabilizer generator fixes a plane");
        assert!(in_plane(basis, &poly.vertices[u]), "{kind}");
        assert!(in_plane(basis, &poly.vertices[v]), "{kind}");
        // Conversely the edge endpoints span the same plane: both basis
        // vectors lie in span{u, v}.
        let edge_plane = polyharmonic_core::exact::rref(&[
            poly.vertices[u].clone(),
            poly.vertices[v].clone(),
        ]);
        let edge_basis: [ExactVec4; 2] = [edge_plane[0].clone(), edge_plane[1].clone()];
        assert!(in_plane(&edge_basis, &basis[0]), "{kind}");
        assert!(in_plane(&edge_basis, &basis[1]), "{kind}");
    }
}

#[test]
fn involutions_fix_planes() {
    // Every order-2 element other than -I has a 2-dimensional fixed space.
    for kind in [PolytopeKind::Cell5, PolytopeKind::Cell8, PolytopeKind::Cell24] {
        let group = group_for(kind).unwrap();
        for idx in group.elements_of_order(2) {
            let rotor = &group.elements[idx];
            let minus_identity = rotor
                .matrix
                .fixed_space_basis()
                .is_empty();
            match fixed_plane(rotor).unwrap() {
                FixedSpace::Plane { .. } => assert!(!minus_identity),
                FixedSpace::EmptyOnSphere => assert!(minus_identity),
                FixedSpace::Full => panic!("order-2 element cannot be the identity"),
            }
        }
    }
}

#[test]
fn transitivity_all_kinds() {
    for kind in PolytopeKind::ADMISSIBLE {
        let poly = model_for(kind).unwrap();
        let group = group_for(kind).unwrap();
        let rep = transitivity_report(&group, &poly);
        assert!(rep.vertex_transitive, "{kind}");
        assert!(rep.edge_transitive, "{kind}");
    }
}

#[test]
fn pair_witnesses_live_in_the_binary_icosahedral_group() {
    // Every element of the 600-cell group composed from pair generators
    // carries a (qL, qR) witness with both parts in 2I; together with the
    // order 7200 = 120 * 120 / 2 this realizes the pair model of the group.
    let poly = model_for(PolytopeKind::Cell600).unwrap();
    let group = group_for(PolytopeKind::Cell600).unwrap();
    let two_i: HashSet<Quaternion> =
        poly.vertices.iter().map(|v| v.to_quaternion()).collect();
    assert_eq!(group.order(), 120 * 120 / 2);
    for rotor in &group.elements {
        let (l, r) = rotor.pair.as_ref().expect("pair generators compose pairs");
        assert!(two_i.contains(l) && two_i.contains(r));
        assert!(rotor.verify_pair_witness());
    }
}
