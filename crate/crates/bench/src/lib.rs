//! Benchmark workloads for `lctop`.

use lctop::{parse_polynomial, Polynomial, Ring};

fn build(variables: &[String], gens: &[String]) -> (Ring, Vec<Polynomial>) {
    let ring = Ring::rational(variables).expect("valid ring");
    let polys = gens
        .iter()
        .map(|g| parse_polynomial(g, &ring).expect("valid generator"))
        .collect();
    (ring, polys)
}

/// Cyclic-`n` homogenized by `h`: the elementary cyclic sums of degree
/// `1..n-1`, and `x0*...*x(n-1) - h^n`.
pub fn cyclic(n: usize) -> (Ring, Vec<Polynomial>) {
    let mut vars: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    vars.push("h".to_string());
    let mut gens = Vec::new();
    for d in 1..n {
        let terms: Vec<String> = (0..n)
            .map(|i| {
                (0..d)
                    .map(|j| format!("x{}", (i + j) % n))
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        gens.push(terms.join(" + "));
    }
    gens.push(format!("{} - h^{n}", vars[..n].join("*")));
    build(&vars, &gens)
}

/// Katsura-`n` homogenized by `h`, in `n + 1` unknowns.
pub fn katsura(n: usize) -> (Ring, Vec<Polynomial>) {
    let mut vars: Vec<String> = (0..=n).map(|i| format!("u{i}")).collect();
    vars.push("h".to_string());
    let u = |i: i64| -> Option<String> {
        let i = i.unsigned_abs() as usize;
        (i <= n).then(|| format!("u{i}"))
    };
    let mut gens = Vec::new();
    let linear: Vec<String> = std::iter::once("u0".to_string())
        .chain((1..=n).map(|i| format!("2*u{i}")))
        .collect();
    gens.push(format!("{} - h", linear.join(" + ")));
    for m in 0..n as i64 {
        let mut terms = Vec::new();
        for l in -(n as i64)..=(n as i64) {
            if let (Some(a), Some(b)) = (u(l), u(m - l)) {
                terms.push(format!("{a}*{b}"));
            }
        }
        gens.push(format!("{} - u{m}*h", terms.join(" + ")));
    }
    build(&vars, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_homogeneous() {
        for (ring, gens) in [cyclic(4), katsura(3)] {
            assert!(gens.iter().all(|g| g.is_homogeneous()));
            assert_eq!(ring.nvars(), 5);
        }
        assert_eq!(cyclic(4).1.len(), 4);
        assert_eq!(katsura(3).1.len(), 4);
    }
}
