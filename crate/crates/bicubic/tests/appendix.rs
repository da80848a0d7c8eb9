mod common;

use std::collections::HashSet;

use bicubic::bijection::{enumerate_maps, inherited_label, phi, phi_inverse, phi_tracked};
use bicubic::planarmap::theta;
use bicubic::primitives::generate_catalog;
use bicubic::surgery::{decompose, glue, glue_at_dart};
use bicubic::Execution;
use common::{big_example, fold, four_vertex_maps, thetas, TABLE_ONE};

#[test]
fn six_vertex_library() {
    let t = theta();
    let mut codes = HashSet::new();
    for (row, a, b) in TABLE_ONE {
        let p = thetas(row);
        assert_eq!(p.path().merge_targets(), vec![a, b], "{row}");
        let m = phi(&p);
        assert!(m.is_valid(), "{row}");
        assert_eq!(m.num_vertices(), 6);
        assert!(m.is_isomorphic(&fold(&[t.clone(), t.clone(), t.clone()], &[a, b])), "{row}");
        assert_eq!(phi_inverse(&m, None).unwrap(), p, "{row}");
        codes.insert(m.canonical_code());
    }
    assert_eq!(codes.len(), 12);

    let cat = generate_catalog(6, Execution::Sequential);
    let all: HashSet<_> = enumerate_maps(3, &cat, Execution::Sequential)
        .unwrap()
        .iter()
        .map(|m| m.canonical_code())
        .collect();
    assert_eq!(all, codes);
}

#[test]
fn four_vertex_maps_are_the_small_glues() {
    let t = theta();
    let drawn = four_vertex_maps();
    let paths = ["U3 D U3 D5", "U3 D2 U3 D4", "U3 D3 U3 D3"];
    for (l, m) in (1..=3).zip(&drawn) {
        assert!(m.is_valid());
        assert!(glue(&t, l, &t).unwrap().is_isomorphic(m), "label {l}");
        assert_eq!(phi_inverse(m, None).unwrap(), thetas(paths[l - 1]));
    }
    let codes: HashSet<_> = drawn.iter().map(|m| m.canonical_code()).collect();
    assert_eq!(codes.len(), 3);
}

#[test]
fn three_theta_example() {
    let t = theta();
    let m1 = glue(&t, 2, &t).unwrap();
    let mp = glue(&m1, 4, &t).unwrap();
    let p = thetas("U3 D2 U3 D U3 D6");
    assert!(phi(&p).is_isomorphic(&mp));
    assert_eq!(phi_inverse(&mp, None).unwrap(), p);

    let d = decompose(&m1).unwrap();
    assert!(d.m1.is_isomorphic(&t));
    assert_eq!(d.distinguished_label, 2);
    assert!(d.m2.is_isomorphic(&t));

    // the first two-edge cut of M_P splits off the later pair of blocks
    let d = decompose(&mp).unwrap();
    assert!(d.m1.is_isomorphic(&t));
    assert_eq!(d.distinguished_label, 2);
    assert!(d.m2.is_isomorphic(&glue(&t, 1, &t).unwrap()));
    let back = glue_at_dart(&d.m1, d.distinguished_dart, &d.m2).map;
    assert!(back.is_isomorphic(&mp));
}

#[test]
fn large_example() {
    let p = big_example();
    assert_eq!(p.path().semilength(), 42);
    assert_eq!(p.path().merge_targets(), vec![6, 11, 25]);
    let blocks = p.decorations();
    assert_ne!(blocks[0].canonical_code(), blocks[2].canonical_code());
    let cat = generate_catalog(12, Execution::Sequential);
    assert!(blocks.iter().all(|b| cat.contains_rooted(b)));

    let (m, darts) = phi_tracked(&p);
    assert!(m.is_valid());
    assert_eq!(m.num_vertices(), 28);
    assert_eq!(m.num_edges(), 42);
    assert!(m.is_isomorphic(&fold(blocks, &[6, 11, 25])));
    assert_eq!(phi_inverse(&m, Some(&cat)).unwrap(), p);

    // each merge edge keeps the label it was addressed by
    let sizes: Vec<usize> = blocks.iter().map(|b| b.num_edges()).collect();
    for t in [6, 11, 25] {
        let (mut i, mut rest) = (0, t);
        while rest > sizes[i] {
            rest -= sizes[i];
            i += 1;
        }
        assert_eq!(inherited_label(&m, darts[i][rest - 1]), t);
    }
}
