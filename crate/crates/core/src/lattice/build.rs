use super::{Element, Lattice};
use crate::error::{Error, Result};

/// Largest lattice any constructor will materialize.
pub const MAX_ELEMENTS: usize = 1024;

const MAX_BOOLEAN_ATOMS: usize = 6;

fn letter(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// Power set of an `n`-element set, ordered by bitmask.
pub fn boolean_lattice(n: usize) -> Result<Lattice> {
    if n > MAX_BOOLEAN_ATOMS {
        return Err(Error::SizeExceeded {
            size: n,
            limit: MAX_BOOLEAN_ATOMS,
        });
    }
    let size = 1usize << n;
    let full = size - 1;
    let names = (0..size)
        .map(|m| match m {
            0 => "0".to_string(),
            m if m == full => "1".to_string(),
            m => (0..n).filter(|i| m >> i & 1 == 1).map(letter).collect(),
        })
        .collect();
    let leq = (0..size)
        .map(|a| (0..size).map(|b| a & !b == 0).collect())
        .collect();
    let meet = (0..size)
        .map(|a| (0..size).map(|b| a & b).collect())
        .collect();
    let join = (0..size)
        .map(|a| (0..size).map(|b| a | b).collect())
        .collect();
    let ortho = (0..size).map(|a| full & !a).collect();
    Lattice::from_tables(names, leq, meet, join, ortho, 0, full)
}

/// The two-element chain `{0, 1}`.
pub fn chain2() -> Lattice {
    boolean_lattice(1).expect("two elements")
}

/// `MO_n`: bottom, top and `n` pairs of incomparable complements.
pub fn mo(n: usize) -> Result<Lattice> {
    let size = 2 * n + 2;
    if size > MAX_ELEMENTS {
        return Err(Error::SizeExceeded {
            size,
            limit: MAX_ELEMENTS,
        });
    }
    let top = size - 1;
    let mut names = vec!["0".to_string()];
    for k in 0..n {
        names.push(letter(k));
        names.push(format!("{}'", letter(k)));
    }
    names.push("1".to_string());
    let leq: Vec<Vec<bool>> = (0..size)
        .map(|a| (0..size).map(|b| a == b || a == 0 || b == top).collect())
        .collect();
    let meet = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    if leq[a][b] {
                        a
                    } else if leq[b][a] {
                        b
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let join = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    if leq[a][b] {
                        b
                    } else if leq[b][a] {
                        a
                    } else {
                        top
                    }
                })
                .collect()
        })
        .collect();
    let ortho = (0..size)
        .map(|a| match a {
            0 => top,
            a if a == top => 0,
            a if a % 2 == 1 => a + 1,
            a => a - 1,
        })
        .collect();
    Lattice::from_tables(names, leq, meet, join, ortho, 0, top)
}

/// Componentwise product; element `(x, y)` has index `x * |L2| + y`.
pub fn product(l1: &Lattice, l2: &Lattice) -> Result<Lattice> {
    let (n1, n2) = (l1.len(), l2.len());
    let size = n1 * n2;
    if size > MAX_ELEMENTS {
        return Err(Error::SizeExceeded {
            size,
            limit: MAX_ELEMENTS,
        });
    }
    let split = |e: Element| (e / n2, e % n2);
    let fuse = |x: Element, y: Element| x * n2 + y;
    let names = (0..size)
        .map(|e| {
            let (x, y) = split(e);
            format!("({},{})", l1.name(x), l2.name(y))
        })
        .collect();
    let table = |f: &dyn Fn(Element, Element) -> Element| -> Vec<Vec<Element>> {
        (0..size)
            .map(|a| (0..size).map(|b| f(a, b)).collect())
            .collect()
    };
    let leq = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    let ((ax, ay), (bx, by)) = (split(a), split(b));
                    l1.leq(ax, bx) && l2.leq(ay, by)
                })
                .collect()
        })
        .collect();
    let meet = table(&|a, b| {
        let ((ax, ay), (bx, by)) = (split(a), split(b));
        fuse(l1.meet(ax, bx), l2.meet(ay, by))
    });
    let join = table(&|a, b| {
        let ((ax, ay), (bx, by)) = (split(a), split(b));
        fuse(l1.join(ax, bx), l2.join(ay, by))
    });
    let ortho = (0..size)
        .map(|a| {
            let (x, y) = split(a);
            fuse(l1.ortho(x), l2.ortho(y))
        })
        .collect();
    Lattice::from_tables(
        names,
        leq,
        meet,
        join,
        ortho,
        fuse(l1.bottom(), l2.bottom()),
        fuse(l1.top(), l2.top()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_distributive, verify_oml};

    #[test]
    fn boolean_sizes_and_names() {
        for n in 0..=4 {
            let b = boolean_lattice(n).unwrap();
            assert_eq!(b.len(), 1 << n);
            assert!(verify_oml(&b).ok);
            assert!(is_distributive(&b));
        }
        let b3 = boolean_lattice(3).unwrap();
        assert_eq!(b3.name(0b011), "ab");
        assert_eq!(
            b3.ortho(b3.element("ab").unwrap()),
            b3.element("c").unwrap()
        );
        assert!(matches!(
            boolean_lattice(7),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn mo_is_orthomodular_but_not_distributive() {
        for n in 1..=4 {
            let m = mo(n).unwrap();
            assert_eq!(m.len(), 2 * n + 2);
            assert!(verify_oml(&m).ok);
        }
        assert!(!is_distributive(&mo(2).unwrap()));
        let m = mo(2).unwrap();
        assert_eq!(
            m.join(m.element("a").unwrap(), m.element("b").unwrap()),
            m.top()
        );
    }

    #[test]
    fn product_with_chain() {
        let p = product(&chain2(), &mo(2).unwrap()).unwrap();
        assert_eq!(p.len(), 12);
        assert!(verify_oml(&p).ok);
        assert_eq!(p.name(p.bottom()), "(0,0)");
        assert_eq!(
            p.ortho(p.element("(1,a)").unwrap()),
            p.element("(0,a')").unwrap()
        );
        let big = boolean_lattice(6).unwrap();
        assert!(matches!(
            product(&big, &big),
            Err(Error::SizeExceeded { .. })
        ));
    }
}
