//! Scenario files shipped with the crate.

use crate::error::Result;
use crate::pipeline::Scenario;

const BUNDLED: &[(&str, &str)] = &[
    ("example_4_1", include_str!("../scenarios/example_4_1.json")),
    ("example_4_2", include_str!("../scenarios/example_4_2.json")),
    ("example_5_3", include_str!("../scenarios/example_5_3.json")),
    ("torus", include_str!("../scenarios/torus.json")),
    ("lines_generic3", include_str!("../scenarios/lines_generic3.json")),
    ("lines_concurrent3", include_str!("../scenarios/lines_concurrent3.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

/// Raw JSON of a bundled scenario; `name` may carry a `.json` suffix.
pub fn source(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Option<Result<Scenario>> {
    source(name).map(Scenario::from_json_str)
}

/// Every bundled scenario, in corpus order. Panics if one fails to parse.
pub fn all() -> Vec<Scenario> {
    names()
        .map(|n| load(n).unwrap().unwrap_or_else(|e| panic!("bundled scenario {n}: {e}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aomoto::os_algebra_lines;

    #[test]
    fn corpus_parses_and_validates() {
        for sc in all() {
            sc.validate().unwrap();
            let back = Scenario::from_json(&sc.to_json()).unwrap();
            assert_eq!(back, sc, "{}", sc.name);
        }
        assert!(load("example_4_1.json").is_some());
        assert!(load("nope").is_none());
    }

    #[test]
    fn line_arrangements_match_builder() {
        let g = load("lines_generic3").unwrap().unwrap();
        assert_eq!(g.algebra, os_algebra_lines(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap());
        let c = load("lines_concurrent3").unwrap().unwrap();
        assert_eq!(c.algebra, os_algebra_lines(3, &[vec![1, 2, 3]]).unwrap());
    }

    #[test]
    fn betti_vectors() {
        let b: Vec<Vec<usize>> = all().iter().map(Scenario::betti).collect();
        assert_eq!(
            b,
            vec![
                vec![1, 3, 2],
                vec![1, 3, 4],
                vec![1, 1, 2, 1],
                vec![1, 2, 1],
                vec![1, 3, 3],
                vec![1, 3, 2],
            ]
        );
    }
}
