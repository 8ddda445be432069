//! Automorphism search by images of a generating sequence.

use super::Quasigroup;

/// A short generating sequence, built greedily: each new generator is the
/// smallest element outside the subloop generated so far.
pub fn generators(q: &Quasigroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = closure(q, &gens);
    while span.len() < q.order() {
        let next = q.elements().find(|x| !span.contains(x)).expect("span is proper");
        gens.push(next);
        span = closure(q, &gens);
    }
    gens
}

/// Elements of the subloop generated by `gens`, in discovery order.
fn closure(q: &Quasigroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; q.order()];
    let mut elems = vec![0];
    seen[0] = true;
    for &g in gens {
        if !std::mem::replace(&mut seen[g], true) {
            elems.push(g);
        }
    }
    let mut grew = true;
    while grew {
        grew = false;
        let snapshot = elems.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let c = q.mul(a, b);
                if !std::mem::replace(&mut seen[c], true) {
                    elems.push(c);
                    grew = true;
                }
            }
        }
    }
    elems
}

/// Extends a generator assignment to a bijection, if it defines a homomorphism.
fn extend(q: &Quasigroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = q.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    for (&g, &h) in gens.iter().zip(images) {
        if map[g] != usize::MAX && map[g] != h {
            return None;
        }
        map[g] = h;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..n {
            for b in 0..n {
                if map[a] == usize::MAX || map[b] == usize::MAX {
                    continue;
                }
                let (c, img) = (q.mul(a, b), q.mul(map[a], map[b]));
                if map[c] == usize::MAX {
                    map[c] = img;
                    changed = true;
                } else if map[c] != img {
                    return None;
                }
            }
        }
    }
    let mut hit = vec![false; n];
    for &x in &map {
        if x == usize::MAX || std::mem::replace(&mut hit[x], true) {
            return None;
        }
    }
    Some(map)
}

/// All automorphisms of `q`, as image arrays, in lexicographic order.
pub fn automorphisms(q: &Quasigroup) -> Vec<Vec<usize>> {
    let gens = generators(q);
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    assign(q, &gens, &mut images, &mut out);
    out.sort();
    out.dedup();
    out
}

fn assign(q: &Quasigroup, gens: &[usize], images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if images.len() == gens.len() {
        if let Some(map) = extend(q, gens, images) {
            out.push(map);
        }
        return;
    }
    for x in 1..q.order() {
        if !images.contains(&x) {
            images.push(x);
            assign(q, gens, images, out);
            images.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::catalog;

    #[test]
    fn automorphism_counts_of_small_groups() {
        // |Aut(Z_n)| = φ(n), Aut(S3) ≅ S3, Aut(Q8) ≅ S4
        assert_eq!(automorphisms(&catalog("Z5").unwrap()).len(), 4);
        assert_eq!(automorphisms(&catalog("Z8").unwrap()).len(), 4);
        assert_eq!(automorphisms(&catalog("S3").unwrap()).len(), 6);
        assert_eq!(automorphisms(&catalog("Q8").unwrap()).len(), 24);
    }

    #[test]
    fn automorphisms_preserve_products() {
        let q = catalog("moufang12").unwrap();
        let auts = automorphisms(&q);
        assert!(auts.len() > 1);
        for a in &auts {
            for x in q.elements() {
                for y in q.elements() {
                    assert_eq!(a[q.mul(x, y)], q.mul(a[x], a[y]));
                }
            }
        }
    }
}
