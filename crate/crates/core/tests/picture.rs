use freebraid::group::{GroupSignature, Word};
use freebraid::picture::{layout, render_minimal_graph, render_svg, MarkKind};
use num_traits::Zero;

fn fig1() -> Word {
    Word::from_tuples(GroupSignature::new(4, 3).unwrap(), &[&[2, 3, 4], &[1, 2, 3]]).unwrap()
}

#[test]
fn golden_figure() {
    let golden = include_str!("golden/fig1.svg");
    assert_eq!(render_svg(&layout(&fig1())), golden);
    assert_eq!(golden.matches("class=\"generator\"").count(), 2);
    assert_eq!(golden.matches("class=\"artifact\"").count(), 4);
}

#[test]
fn strands_are_monotone_and_anchored() {
    let s = GroupSignature::new(6, 3).unwrap();
    let w = Word::from_tuples(s, &[&[1, 4, 6], &[2, 3, 5], &[1, 2, 3], &[4, 5, 6]]).unwrap();
    let d = layout(&w);
    assert_eq!(d.count(MarkKind::Generator), 4);
    for (i, line) in d.strands().iter().enumerate() {
        let col = (i + 1) as i64;
        assert_eq!(line[0], (col.into(), Zero::zero()));
        assert_eq!(*line.last().unwrap(), (col.into(), 1.into()));
        assert!(line.windows(2).all(|p| p[0].1 < p[1].1));
    }
}

#[test]
fn dot_output() {
    let s = GroupSignature::new(3, 2).unwrap();
    let w = Word::from_tuples(s, &[&[1, 2], &[2, 3]]).unwrap();
    let dot = render_minimal_graph(&w).unwrap();
    assert!(dot.starts_with("graph minimal {\n"));
    assert!(dot.contains("v0 -- v1 [label=\"2\"]"));
}
