//! Subsets of a small carrier as bit masks.

/// Bit `i` set means carrier element `i` is in the subset.
pub type Mask = u32;

pub fn singleton(i: usize) -> Mask {
    1 << i
}

pub fn contains(mask: Mask, i: usize) -> bool {
    mask & (1 << i) != 0
}

pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// Indices of the set bits, ascending.
pub fn elems(mask: Mask) -> impl Iterator<Item = usize> {
    (0..u32::BITS as usize).filter(move |&i| mask & (1 << i) != 0)
}

pub fn from_elems<I: IntoIterator<Item = usize>>(iter: I) -> Mask {
    iter.into_iter().fold(0, |m, i| m | (1 << i))
}

/// Renders a subset with the carrier's labels, e.g. `{0,1}`.
pub fn render(mask: Mask, labels: &[String]) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for i in elems(mask) {
        if !first {
            out.push(',');
        }
        out.push_str(&labels[i]);
        first = false;
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_elems() {
        let m = from_elems([0, 2, 5]);
        assert_eq!(elems(m).collect::<Vec<_>>(), vec![0, 2, 5]);
        assert!(contains(m, 2));
        assert!(!contains(m, 1));
    }

    #[test]
    fn render_uses_labels() {
        let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(render(from_elems([0, 2]), &labels), "{x,z}");
        assert_eq!(render(0, &labels), "{}");
    }
}
