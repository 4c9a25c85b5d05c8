use num_bigint::BigInt;
use num_traits::{One, Zero};
use pathbox_core::{det_direct, Graph, IntMatrix};

/// n×n block matrix with `A(P_m)` on the diagonal, `I_m` on path-adjacent blocks.
fn assembled_block_matrix(n: usize, m: usize) -> IntMatrix {
    let b = Graph::path(m).unwrap().adjacency_matrix();
    let mut out = IntMatrix::zeros(n * m);
    for bi in 0..n {
        for bj in 0..n {
            for r in 0..m {
                for c in 0..m {
                    let v = if bi == bj {
                        b[(r, c)].clone()
                    } else if bi.abs_diff(bj) == 1 && r == c {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    };
                    out[(bi * m + r, bj * m + c)] = v;
                }
            }
        }
    }
    out
}

#[test]
fn box_product_has_block_structure() {
    for n in 1..=8 {
        for m in 1..=8 {
            let g = Graph::path(n)
                .unwrap()
                .box_product(&Graph::path(m).unwrap());
            assert_eq!(
                g.adjacency_matrix(),
                assembled_block_matrix(n, m),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn degree_sum_and_symmetry() {
    let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
    let graphs = [
        Graph::path(3)
            .unwrap()
            .box_product(&Graph::path(5).unwrap()),
        c4.box_product(&Graph::path(3).unwrap()),
        c4.box_product(&c4),
    ];
    for g in &graphs {
        let a = g.adjacency_matrix();
        assert!(a.is_symmetric());
        let total: BigInt = a.rows().flatten().sum();
        assert_eq!(total, BigInt::from(2 * g.edge_count()));
        assert!((0..a.size()).all(|i| a[(i, i)].is_zero()));
    }
}

#[test]
fn edge_count_formula() {
    let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
    let p3 = Graph::path(3).unwrap();
    for (g, h) in [(&c4, &p3), (&p3, &c4), (&c4, &c4)] {
        let prod = g.box_product(h);
        assert_eq!(
            prod.edge_count(),
            g.n_vertices() * h.edge_count() + h.n_vertices() * g.edge_count()
        );
    }
}

#[test]
fn swapping_factors_preserves_the_determinant() {
    for n in 1..=7 {
        for m in 1..=7 {
            assert_eq!(
                det_direct(n, m, 400).unwrap(),
                det_direct(m, n, 400).unwrap()
            );
        }
    }
}
