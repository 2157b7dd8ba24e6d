use super::{Element, OrientedSingquandle};

/// True iff `f` preserves `*`, `R1` and `R2`.
pub fn is_homomorphism(f: &[Element], src: &OrientedSingquandle, dst: &OrientedSingquandle) -> bool {
    let n = src.order();
    f.len() == n
        && f.iter().all(|&v| v < dst.order())
        && (0..n).all(|x| {
            (0..n).all(|y| {
                f[src.star(x, y)] == dst.star(f[x], f[y])
                    && f[src.r1(x, y)] == dst.r1(f[x], f[y])
                    && f[src.r2(x, y)] == dst.r2(f[x], f[y])
            })
        })
}

/// Per-element counts of fixed points used to prune the isomorphism search.
fn signature(s: &OrientedSingquandle, x: Element) -> [usize; 7] {
    let n = s.order();
    let count = |p: &dyn Fn(Element) -> bool| (0..n).filter(|&y| p(y)).count();
    [
        count(&|y| s.star(x, y) == x),
        count(&|y| s.star(y, x) == y),
        count(&|y| s.r1(x, y) == x),
        count(&|y| s.r1(y, x) == y),
        count(&|y| s.r2(x, y) == x),
        count(&|y| s.r2(y, x) == y),
        usize::from(s.r1(x, x) == x) + 2 * usize::from(s.r2(x, x) == x),
    ]
}

/// Searches for an isomorphism `a → b`, returned as the image of each element.
pub fn are_isomorphic(a: &OrientedSingquandle, b: &OrientedSingquandle) -> Option<Vec<Element>> {
    let n = a.order();
    if b.order() != n {
        return None;
    }
    let sig_a: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &sig_a, &sig_b, 0, &mut map, &mut used).then_some(map)
}

fn consistent(a: &OrientedSingquandle, b: &OrientedSingquandle, map: &[Element], upto: usize) -> bool {
    let x = upto;
    (0..=upto).all(|y| {
        [(x, y), (y, x)].iter().all(|&(p, q)| {
            let check = |s: Element, t: Element| map[s] == usize::MAX || map[s] == t;
            check(a.star(p, q), b.star(map[p], map[q]))
                && check(a.r1(p, q), b.r1(map[p], map[q]))
                && check(a.r2(p, q), b.r2(map[p], map[q]))
        })
    })
}

fn extend(
    a: &OrientedSingquandle,
    b: &OrientedSingquandle,
    sig_a: &[[usize; 7]],
    sig_b: &[[usize; 7]],
    x: Element,
    map: &mut Vec<Element>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.order();
    if x == n {
        return is_homomorphism(map, a, b);
    }
    for t in 0..n {
        if used[t] || sig_a[x] != sig_b[t] {
            continue;
        }
        map[x] = t;
        used[t] = true;
        if consistent(a, b, map, x) && extend(a, b, sig_a, sig_b, x + 1, map, used) {
            return true;
        }
        used[t] = false;
        map[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::OperationTable;

    fn z6() -> OrientedSingquandle {
        OrientedSingquandle::from_formulas(6, "-x+2y", "3+2x-y", "3+x").unwrap()
    }

    #[test]
    fn identity_is_a_homomorphism_and_isomorphism() {
        let s = z6();
        let id: Vec<_> = (0..6).collect();
        assert!(is_homomorphism(&id, &s, &s));
        assert_eq!(are_isomorphic(&s, &s), Some(id));
    }

    #[test]
    fn swapping_elements_breaks_structure() {
        let s = z6();
        let f = vec![1, 0, 2, 3, 4, 5];
        assert!(!is_homomorphism(&f, &s, &s));
    }

    #[test]
    fn constant_map_to_fixed_element() {
        let s = z6();
        for e in 0..6 {
            let f = vec![e; 6];
            let oracle = s.r1(e, e) == e && s.r2(e, e) == e && s.star(e, e) == e;
            assert_eq!(is_homomorphism(&f, &s, &s), oracle);
        }
    }

    #[test]
    fn non_isomorphic_two_element_structures() {
        let trivial = OrientedSingquandle::from_quandle(OperationTable::projection(2)).unwrap();
        let shifted = OrientedSingquandle::from_formulas(2, "x", "x+1", "y+1");
        // R1 = x + 1 forces R2 = R1(y, x*y) = y + 1 via axiom (4).
        let shifted = shifted.expect("two-element shifted structure is valid");
        assert_eq!(are_isomorphic(&trivial, &shifted), None);
    }
}
