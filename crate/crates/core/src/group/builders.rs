//! Builders for the group families the case studies use.
//!
//! Every builder returns a table with the identity at index 0. The dicyclic
//! and sl2 families cover the binary polyhedral groups needed at finite
//! subgroup scale: dicyclic(2) is the quaternion group, sl2(3) the binary
//! tetrahedral group, sl2(5) the binary icosahedral group.

use super::{FiniteGroup, GroupError};
use std::collections::HashMap;

pub const GENERATION_CAP_DEFAULT: usize = 10_000;

fn is_permutation(p: &[usize]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &v in p {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    // diagrammatic: p first, then q
    p.iter().map(|&i| q[i]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = p[start];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = p[cur];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Closure of a set of permutations under diagrammatic composition.
pub fn group_from_generators(perms: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    group_from_generators_capped(perms, GENERATION_CAP_DEFAULT)
}

pub fn group_from_generators_capped(
    perms: &[Vec<usize>],
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    if perms.is_empty() {
        return Ok(FiniteGroup::trivial());
    }
    let n = perms[0].len();
    for (i, p) in perms.iter().enumerate() {
        if p.len() != n || !is_permutation(p) {
            return Err(GroupError::BadParameter(format!(
                "generator {i} is not a permutation of 0..{n}"
            )));
        }
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut frontier = 0;
    while frontier < elements.len() {
        let cur = elements[frontier].clone();
        for gen in perms {
            let next = compose_perm(&cur, gen);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded {
                        what: "generation",
                        value: elements.len() + 1,
                        cap,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        frontier += 1;
    }
    group_from_permutation_list(elements, index)
}

/// Cayley table of an explicit, closed permutation list (identity first).
fn group_from_permutation_list(
    elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
) -> Result<FiniteGroup, GroupError> {
    let order = elements.len();
    let mut mul = vec![0usize; order * order];
    for a in 0..order {
        for b in 0..order {
            let prod = compose_perm(&elements[a], &elements[b]);
            mul[a * order + b] = *index.get(&prod).ok_or_else(|| {
                GroupError::NotSubgroup("permutation list is not closed".into())
            })?;
        }
    }
    let mut inv = vec![0usize; order];
    for a in 0..order {
        let mut ia = vec![0usize; elements[a].len()];
        for (i, &v) in elements[a].iter().enumerate() {
            ia[v] = i;
        }
        inv[a] = index[&ia];
    }
    let labels = elements.iter().map(|p| cycle_notation(p)).collect();
    Ok(FiniteGroup::from_parts_unchecked(order, mul, inv, Some(labels)))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter("cyclic(n) needs n >= 1".into()));
    }
    let mut mul = vec![0usize; n * n];
    let mut inv = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = (i + j) % n;
        }
        inv[i] = (n - i) % n;
    }
    let labels = (0..n)
        .map(|i| if i == 0 { "e".into() } else { format!("g{i}") })
        .collect();
    Ok(FiniteGroup::from_parts_unchecked(n, mul, inv, Some(labels)))
}

/// Dihedral group of order 2n: words rⁱsᵃ with srs = r⁻¹, index a·n + i.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter("dihedral(n) needs n >= 1".into()));
    }
    let order = 2 * n;
    let idx = |i: usize, a: usize| a * n + i;
    let mut mul = vec![0usize; order * order];
    let mut inv = vec![0usize; order];
    for i in 0..n {
        for a in 0..2 {
            for j in 0..n {
                for b in 0..2 {
                    // (rⁱsᵃ)(rʲsᵇ) = r^(i + j·(−1)ᵃ) s^(a+b)
                    let shift = if a == 0 { j } else { (n - j) % n };
                    mul[idx(i, a) * order + idx(j, b)] = idx((i + shift) % n, (a + b) % 2);
                }
            }
            inv[idx(i, a)] = if a == 0 { idx((n - i) % n, 0) } else { idx(i, 1) };
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (a, i) = (x / n, x % n);
            match (i, a) {
                (0, 0) => "e".into(),
                (i, 0) => format!("r{i}"),
                (0, _) => "s".into(),
                (i, _) => format!("r{i}s"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_parts_unchecked(order, mul, inv, Some(labels)))
}

/// Dicyclic group of order 4n: a²ⁿ = e, b² = aⁿ, b⁻¹ab = a⁻¹; index j·2n + i
/// for aⁱbʲ. dicyclic(2) is the quaternion group Q₈.
pub fn dicyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter("dicyclic(n) needs n >= 1".into()));
    }
    let m = 2 * n;
    let order = 4 * n;
    let idx = |i: usize, j: usize| j * m + i;
    let mut mul = vec![0usize; order * order];
    let mut inv = vec![0usize; order];
    for i in 0..m {
        for j in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    let v = if j == 0 {
                        idx((i + k) % m, l)
                    } else if l == 0 {
                        idx((i + m - k) % m, 1)
                    } else {
                        idx((i + m - k + n) % m, 0)
                    };
                    mul[idx(i, j) * order + idx(k, l)] = v;
                }
            }
            inv[idx(i, j)] =
                if j == 0 { idx((m - i) % m, 0) } else { idx((i + n) % m, 1) };
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (j, i) = (x / m, x % m);
            match (i, j) {
                (0, 0) => "e".into(),
                (i, 0) => format!("a{i}"),
                (0, _) => "b".into(),
                (i, _) => format!("a{i}b"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_parts_unchecked(order, mul, inv, Some(labels)))
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation in place
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn parity(p: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

const PERM_DEGREE_MAX: usize = 6;

/// Symmetric group on n points, all n! permutations in lexicographic order.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > PERM_DEGREE_MAX {
        return Err(GroupError::BadParameter(format!(
            "symmetric(n) supports 1 <= n <= {PERM_DEGREE_MAX}"
        )));
    }
    let elements = permutations_lex(n);
    let index: HashMap<Vec<usize>, usize> =
        elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    group_from_permutation_list(elements, index)
}

/// Alternating group on n points (even permutations, lexicographic order).
pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > PERM_DEGREE_MAX {
        return Err(GroupError::BadParameter(format!(
            "alternating(n) supports 1 <= n <= {PERM_DEGREE_MAX}"
        )));
    }
    let elements: Vec<Vec<usize>> =
        permutations_lex(n).into_iter().filter(|p| parity(p) == 0).collect();
    let index: HashMap<Vec<usize>, usize> =
        elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    group_from_permutation_list(elements, index)
}

const SL2_PRIMES: [usize; 6] = [2, 3, 5, 7, 11, 13];

/// SL(2,p): 2×2 matrices of determinant 1 over the field with p elements,
/// order p(p²−1). Multiplication is the classical matrix product mod p.
pub fn sl2(p: usize) -> Result<FiniteGroup, GroupError> {
    if !SL2_PRIMES.contains(&p) {
        return Err(GroupError::BadParameter(format!(
            "sl2(p) supports prime p in {SL2_PRIMES:?}"
        )));
    }
    let mut elements: Vec<[usize; 4]> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 % p {
                        elements.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    // put the identity matrix at index 0
    let id_pos = elements.iter().position(|m| *m == [1 % p, 0, 0, 1 % p]).unwrap();
    elements.swap(0, id_pos);
    let order = elements.len();
    let index: HashMap<[usize; 4], usize> =
        elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let matmul = |x: &[usize; 4], y: &[usize; 4]| -> [usize; 4] {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    };
    let mut mul = vec![0usize; order * order];
    for i in 0..order {
        for j in 0..order {
            mul[i * order + j] = index[&matmul(&elements[i], &elements[j])];
        }
    }
    let mut inv = vec![0usize; order];
    for (i, m) in elements.iter().enumerate() {
        // [[a,b],[c,d]]⁻¹ = [[d,−b],[−c,a]] when det = 1
        let im = [m[3], (p - m[1]) % p, (p - m[2]) % p, m[0]];
        inv[i] = index[&im];
    }
    let labels = elements
        .iter()
        .map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]))
        .collect();
    Ok(FiniteGroup::from_parts_unchecked(order, mul, inv, Some(labels)))
}

/// The order-12 semidirect product ℤ₃⋊(ℤ₂×ℤ₂) where the first ℤ₂ factor
/// inverts ℤ₃ and the second acts trivially. Elements (z,s,t) are indexed
/// z + 3s + 6t, so {0,3} and {0,6} are the two ℤ₂ factors and {0,1,2} the
/// normal ℤ₃.
pub fn z3_semidirect_klein() -> FiniteGroup {
    let order = 12;
    let idx = |z: usize, s: usize, t: usize| z + 3 * s + 6 * t;
    let mut mul = vec![0usize; order * order];
    let mut inv = vec![0usize; order];
    for z1 in 0..3 {
        for s1 in 0..2 {
            for t1 in 0..2 {
                for z2 in 0..3 {
                    for s2 in 0..2 {
                        for t2 in 0..2 {
                            let z = if s1 == 0 { (z1 + z2) % 3 } else { (z1 + 3 - z2) % 3 };
                            mul[idx(z1, s1, t1) * order + idx(z2, s2, t2)] =
                                idx(z, (s1 + s2) % 2, (t1 + t2) % 2);
                        }
                    }
                }
                let zi = if s1 == 0 { (3 - z1) % 3 } else { z1 };
                inv[idx(z1, s1, t1)] = idx(zi, s1, t1);
            }
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (z, s, t) = (x % 3, (x / 3) % 2, x / 6);
            if x == 0 {
                "e".into()
            } else {
                let mut w = String::new();
                if z > 0 {
                    w.push_str(&format!("z{z}"));
                }
                if s == 1 {
                    w.push('s');
                }
                if t == 1 {
                    w.push('t');
                }
                w
            }
        })
        .collect();
    FiniteGroup::from_parts_unchecked(order, mul, inv, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_orders_match_formulas() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dicyclic(2).unwrap().order(), 8);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(z3_semidirect_klein().order(), 12);
    }

    #[test]
    fn all_builders_pass_full_validation() {
        // re-run the checked constructor on every builder output
        let gs = [
            cyclic(6).unwrap(),
            dihedral(3).unwrap(),
            dicyclic(3).unwrap(),
            symmetric(4).unwrap(),
            alternating(5).unwrap(),
            sl2(3).unwrap(),
            z3_semidirect_klein(),
        ];
        for g in gs {
            let revalidated =
                FiniteGroup::from_mul_table(g.mul_rows(), g.labels().map(|l| l.to_vec()))
                    .expect("builder output must satisfy group axioms");
            assert_eq!(revalidated.order(), g.order());
        }
    }

    #[test]
    fn quaternion_group_has_unique_involution() {
        let q8 = dicyclic(2).unwrap();
        let involutions: Vec<usize> =
            (0..8).filter(|&x| x != 0 && q8.mul(x, x) == 0).collect();
        assert_eq!(involutions.len(), 1);
    }

    #[test]
    fn generators_of_s3() {
        let g = group_from_generators(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn single_transposition_generates_z2() {
        let g = group_from_generators(&[vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        assert_eq!(group_from_generators(&[]).unwrap().order(), 1);
    }

    #[test]
    fn generation_cap_is_enforced() {
        let err = group_from_generators_capped(&[vec![1, 2, 0], vec![1, 0, 2]], 4).unwrap_err();
        assert!(matches!(err, GroupError::CapExceeded { .. }));
    }

    #[test]
    fn sl2_identity_is_index_zero() {
        let g = sl2(5).unwrap();
        assert_eq!(g.label(0), Some("[[1,0],[0,1]]"));
    }

    #[test]
    fn z3_semidirect_klein_subgroup_layout() {
        let g = z3_semidirect_klein();
        // {0,1,2} is normal Z3, {0,3} inverts it, {0,6} commutes with it
        assert_eq!(g.mul(1, 1), 2);
        assert_eq!(g.conj(3, 1), 2);
        assert_eq!(g.conj(6, 1), 1);
        assert_eq!(g.element_order(3), 2);
        assert_eq!(g.element_order(6), 2);
    }
}
