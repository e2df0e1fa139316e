use crate::group::{
    alternating, build_cyclic, build_dihedral, build_elementary_abelian, build_from_permutations,
    build_generalized_quaternion, build_heisenberg, direct_product, symmetric, Group, Permutation,
};
use crate::number_theory::is_prime;

/// Frobenius group of order 21: `i -> i + 1` and `i -> 2i` on `Z_7`.
pub fn frobenius_21() -> Group {
    build_from_permutations(
        "F21",
        &[
            Permutation::from_images((0..7).map(|i| (i + 1) % 7).collect()).expect("bijection"),
            Permutation::from_images((0..7).map(|i| 2 * i % 7).collect()).expect("bijection"),
        ],
    )
    .expect("F21 fits the cap")
}

/// `(Z_7 x Z_7) : Z_3`, translations of the plane over `Z_7` extended by the
/// scalar 2, acting on 49 points.
pub fn frobenius_147() -> Group {
    let point = |x: u32, y: u32| x * 7 + y;
    let map = |f: &dyn Fn(u32, u32) -> (u32, u32)| {
        let images = (0..49)
            .map(|v| {
                let (x, y) = f(v / 7, v % 7);
                point(x, y)
            })
            .collect();
        Permutation::from_images(images).expect("bijection")
    };
    build_from_permutations(
        "[Z7 x Z7]Z3",
        &[
            map(&|x, y| ((x + 1) % 7, y)),
            map(&|x, y| (x, (y + 1) % 7)),
            map(&|x, y| (2 * x % 7, 2 * y % 7)),
        ],
    )
    .expect("order 147 fits the cap")
}

/// Generalized dihedral group of `Z_3 x Z_3`, order 18.
pub fn dihedral_z3_squared() -> Group {
    let map = |f: &dyn Fn(u32, u32) -> (u32, u32)| {
        let images = (0..9)
            .map(|v| {
                let (x, y) = f(v / 3, v % 3);
                x * 3 + y
            })
            .collect();
        Permutation::from_images(images).expect("bijection")
    };
    build_from_permutations(
        "Dih(Z3 x Z3)",
        &[
            map(&|x, y| ((x + 1) % 3, y)),
            map(&|x, y| (x, (y + 1) % 3)),
            map(&|x, y| ((3 - x) % 3, (3 - y) % 3)),
        ],
    )
    .expect("order 18 fits the cap")
}

fn z(n: usize) -> Group {
    build_cyclic(n).expect("small cyclic group")
}

fn product(a: &Group, b: &Group) -> Group {
    direct_product(a, b).expect("catalog products fit the cap")
}

/// The built-in group catalog, restricted to orders up to `max_order`.
///
/// Families: cyclic groups, elementary abelian groups of rank at least 2,
/// generalized quaternion, dihedral and Heisenberg groups, small symmetric and
/// alternating groups, two Frobenius groups and a list of direct products.
/// The list is deterministic and duplicate-free by label.
pub fn catalog(max_order: usize) -> Vec<Group> {
    let max = max_order.min(crate::group::MAX_GROUP_ORDER);
    let mut out: Vec<Group> = Vec::new();
    out.extend((2..=max).map(z));
    for p in (2..=max).filter(|&p| is_prime(p as u64)) {
        let mut k = 2u32;
        while p.pow(k) <= max {
            out.push(build_elementary_abelian(p, k).expect("within cap"));
            k += 1;
        }
    }
    out.extend((2..=max / 4).map(|m| build_generalized_quaternion(m).expect("within cap")));
    out.extend((3..=max / 2).map(|m| build_dihedral(m).expect("within cap")));
    for p in (3..=max).filter(|&p| is_prime(p as u64) && p * p * p <= max) {
        out.push(build_heisenberg(p).expect("within cap"));
    }

    let fixed: [(usize, &dyn Fn() -> Group); 9] = [
        (2, &|| symmetric(2).unwrap()),
        (3, &|| alternating(3).unwrap()),
        (6, &|| symmetric(3).unwrap()),
        (12, &|| alternating(4).unwrap()),
        (24, &|| symmetric(4).unwrap()),
        (60, &|| alternating(5).unwrap()),
        (120, &|| symmetric(5).unwrap()),
        (21, &frobenius_21),
        (147, &frobenius_147),
    ];
    for (order, build) in fixed {
        if order <= max {
            out.push(build());
        }
    }
    if 18 <= max {
        out.push(dihedral_z3_squared());
    }

    type Factor<'a> = &'a dyn Fn() -> Group;
    let products: [(Factor, Factor, usize); 17] = [
        (&|| z(4), &|| z(2), 8),
        (&|| z(4), &|| z(4), 16),
        (&|| z(8), &|| z(2), 16),
        (&|| z(9), &|| z(3), 27),
        (&|| z(2), &|| z(6), 12),
        (&|| z(3), &|| z(6), 18),
        (&|| symmetric(3).unwrap(), &|| z(3), 18),
        (&|| symmetric(3).unwrap(), &|| symmetric(3).unwrap(), 36),
        (&|| z(2), &|| build_generalized_quaternion(2).unwrap(), 16),
        (&|| z(2), &|| build_dihedral(4).unwrap(), 16),
        (&|| z(3), &|| build_generalized_quaternion(2).unwrap(), 24),
        (&|| z(5), &|| symmetric(3).unwrap(), 30),
        (&|| z(2), &|| alternating(4).unwrap(), 24),
        (&|| z(2), &|| symmetric(4).unwrap(), 48),
        (&|| alternating(4).unwrap(), &|| z(3), 36),
        (&|| build_dihedral(4).unwrap(), &|| z(3), 24),
        (&|| z(3), &|| build_generalized_quaternion(4).unwrap(), 48),
    ];
    for (a, b, order) in products {
        if order <= max {
            out.push(product(&a(), &b()));
        }
    }
    out
}
