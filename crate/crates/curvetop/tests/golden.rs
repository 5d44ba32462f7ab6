//! End-to-end lists for curves whose topology is known by hand.

use curvetop::topo::{analyze, parse_poly, Analysis, Options};

fn run(src: &str) -> Analysis {
    analyze(&parse_poly(src).unwrap(), &Options::default()).unwrap()
}

fn list(src: &str) -> String {
    run(src).list.to_text()
}

#[test]
fn circle() {
    let a = run("x^2 + y^2 - 1");
    assert_eq!(a.list.to_text(), "[0,[1,[[0,0],[0,2],[0,0]]],2,[1,[[0,0],[2,0],[0,0]]],0]");
    assert_eq!(a.graph.components(), 1);
    assert_eq!(a.graph.euler_characteristic(), 0);
}

#[test]
fn cusp() {
    let a = run("y^2 - x^3");
    assert_eq!(a.list.to_text(), "[0,[1,[[0,0],[0,2],[0,0]]],2]");
    assert_eq!(a.graph.euler_characteristic(), 1);
}

#[test]
fn node() {
    assert_eq!(list("y^2 - x^2*(x+1)"), "[0,[1,[[0,0],[0,2],[0,0]]],2,[1,[[0,0],[2,2],[0,0]]],2]");
}

#[test]
fn isolated_point() {
    let a = run("x^2 + y^2");
    assert_eq!(a.list.to_text(), "[0,[1,[[0,0],[0,0],[0,0]]],0]");
    assert_eq!(a.graph.components(), 1);
}

#[test]
fn hyperbola() {
    let a = run("x*y - 1");
    assert_eq!(a.list.to_text(), "[1,[0,[[1,0],[0,1]]],1]");
    assert_eq!(a.graph.components(), 2);
}

#[test]
fn parabola_and_lines() {
    assert_eq!(list("y^2 - x"), "[0,[1,[[0,0],[0,2],[0,0]]],2]");
    assert_eq!(list("y"), "[1]");
    assert_eq!(list("x^2 + y^2 + 1"), "[0]");
    assert_eq!(list("y - x"), "[1]");
}

#[test]
fn pure_vertical_lines() {
    let a = run("x");
    assert_eq!(a.list.to_text(), "[[0,1]]");
    assert_eq!(a.graph.components(), 1);
    assert_eq!(list("x^2 - 2"), "[[0,2]]");
}

#[test]
fn example_grid() {
    let want = "[3,[2,[[0,0],[2,2],[1,1],[0,0]]],3,[4,[[0,0],[1,1],[1,1],[0,2],[1,1],[0,0]]],5,\
                [2,[[1,0],[2,2],[2,2],[0,1]]],5,[4,[[0,0],[1,1],[2,0],[1,1],[1,1],[0,0]]],3,\
                [2,[[0,0],[1,1],[2,2],[0,0]]],3]";
    assert_eq!(list("(x*y-1)*(4*y^2-4*x-1)*(4*y^2+4*x-1)"), want);
}
