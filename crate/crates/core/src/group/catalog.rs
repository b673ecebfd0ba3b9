//! Built-in group catalog: trivial, `Z/n` (n <= 12), `D_n` (n <= 6),
//! `S_3`, `S_4`, `Q_8` and the Klein four group `Z/2xZ/2`.

use super::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|i| (0..n).map(|j| ((i + j) % n) as u32).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_table(table, Some(labels)).expect("cyclic table")
}

/// Dihedral group of order `2n`: element `i + n*j` is `r^i s^j`, with
/// `s r s = r^{-1}`.
fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let idx = |r: usize, s: usize| (r % n + n * (s % 2)) as u32;
    let mut table = vec![vec![0u32; order]; order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
                    let r = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                    table[idx(i, j) as usize][idx(k, l) as usize] = idx(r, j + l);
                }
            }
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (r, s) = (x % n, x / n);
            match (r, s) {
                (0, 0) => "e".to_string(),
                (r, 0) => format!("r{r}"),
                (0, _) => "s".to_string(),
                (r, _) => format!("r{r}s"),
            }
        })
        .collect();
    FiniteGroup::from_table(table, Some(labels)).expect("dihedral table")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Symmetric group on `n` letters; composition is `(p*q)(x) = p(q(x))`.
fn symmetric(n: usize) -> FiniteGroup {
    let perms = permutations(n);
    let index: HashMap<Vec<usize>, u32> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                    index[&composed]
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| format!("{p:?}")).collect();
    FiniteGroup::from_table(table, Some(labels)).expect("symmetric table")
}

/// Quaternion group as signed basis quaternions `{±1, ±i, ±j, ±k}`.
fn quaternion() -> FiniteGroup {
    // (sign, axis) with axis in {1, i, j, k}; index = axis + 4*sign_bit
    let mul_axis = |a: usize, b: usize| -> (i32, usize) {
        match (a, b) {
            (0, x) => (1, x),
            (x, 0) => (1, x),
            (1, 1) | (2, 2) | (3, 3) => (-1, 0),
            (1, 2) => (1, 3),
            (2, 1) => (-1, 3),
            (2, 3) => (1, 1),
            (3, 2) => (-1, 1),
            (3, 1) => (1, 2),
            (1, 3) => (-1, 2),
            _ => unreachable!(),
        }
    };
    let idx = |sign: i32, axis: usize| -> u32 { (axis + if sign < 0 { 4 } else { 0 }) as u32 };
    let mut table = vec![vec![0u32; 8]; 8];
    for sa in [1i32, -1] {
        for a in 0..4 {
            for sb in [1i32, -1] {
                for b in 0..4 {
                    let (s, axis) = mul_axis(a, b);
                    table[idx(sa, a) as usize][idx(sb, b) as usize] = idx(sa * sb * s, axis);
                }
            }
        }
    }
    let labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"].map(String::from).to_vec();
    FiniteGroup::from_table(table, Some(labels)).expect("quaternion table")
}

fn klein_four() -> FiniteGroup {
    let table = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    let labels = ["e", "a", "b", "ab"].map(String::from).to_vec();
    FiniteGroup::from_table(table, Some(labels)).expect("klein table")
}

/// Stable list of catalog names.
pub fn catalog_names() -> Vec<String> {
    let mut names = vec!["trivial".to_string()];
    names.extend((2..=12).map(|n| format!("Z/{n}")));
    names.extend((1..=6).map(|n| format!("D_{n}")));
    names.extend(["S_3", "S_4", "Q_8", "Z/2xZ/2"].map(String::from));
    names
}

fn build(name: &str) -> Option<FiniteGroup> {
    if name == "trivial" || name == "Z/1" {
        return Some(cyclic(1));
    }
    if let Some(n) = name.strip_prefix("Z/").and_then(|s| s.parse::<usize>().ok()) {
        if (2..=12).contains(&n) {
            return Some(cyclic(n));
        }
        return None;
    }
    if let Some(n) = name.strip_prefix("D_").and_then(|s| s.parse::<usize>().ok()) {
        if (1..=6).contains(&n) {
            return Some(dihedral(n));
        }
        return None;
    }
    match name {
        "S_3" => Some(symmetric(3)),
        "S_4" => Some(symmetric(4)),
        "Q_8" => Some(quaternion()),
        "Z/2xZ/2" => Some(klein_four()),
        _ => None,
    }
}

/// Look up a catalog group by name. Results are cached and shared.
pub fn catalog_group(name: &str) -> Result<Arc<FiniteGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("catalog cache lock");
    if let Some(g) = guard.get(name) {
        return Ok(Arc::clone(g));
    }
    let g = build(name).ok_or_else(|| Error::Parse(format!("unknown catalog group `{name}`")))?;
    let arc = Arc::new(g);
    guard.insert(name.to_string(), Arc::clone(&arc));
    Ok(arc)
}

#[cfg(test)]
mod tests {
    use super::super::are_isomorphic;
    use super::*;

    #[test]
    fn all_catalog_entries_are_groups() {
        for name in catalog_names() {
            let g = catalog_group(&name).unwrap();
            assert!(g.order() >= 1, "{name}");
        }
    }

    #[test]
    fn expected_orders() {
        assert_eq!(catalog_group("trivial").unwrap().order(), 1);
        assert_eq!(catalog_group("Z/12").unwrap().order(), 12);
        assert_eq!(catalog_group("D_6").unwrap().order(), 12);
        assert_eq!(catalog_group("S_4").unwrap().order(), 24);
        assert_eq!(catalog_group("Q_8").unwrap().order(), 8);
    }

    #[test]
    fn structural_coincidences() {
        let d3 = catalog_group("D_3").unwrap();
        let s3 = catalog_group("S_3").unwrap();
        assert!(are_isomorphic(&d3, &s3));
        let d2 = catalog_group("D_2").unwrap();
        let v4 = catalog_group("Z/2xZ/2").unwrap();
        assert!(are_isomorphic(&d2, &v4));
        assert!(!are_isomorphic(&catalog_group("Z/4").unwrap(), &v4));
    }

    #[test]
    fn q8_element_orders() {
        let q8 = catalog_group("Q_8").unwrap();
        let mut orders: Vec<usize> = q8.elements().map(|x| q8.element_order(x)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }
}
