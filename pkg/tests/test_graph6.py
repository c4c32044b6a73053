import networkx as nx
import pytest

import oracles
from aspectral import Graph, build_graph, complete, cycle, graph6_decode, graph6_encode
from aspectral.errors import Graph6Error


def test_known_strings():
    assert graph6_encode(complete(2)) == "A_"
    assert graph6_encode(build_graph(2, [])) == "A?"
    assert graph6_encode(build_graph(1, [])) == "@"
    assert graph6_decode("A_").edges == ((0, 1),)
    assert graph6_decode("@").n == 1


def test_round_trip_small(rng):
    for _ in range(200):
        g = oracles.random_graph(rng, rng.randint(1, 12), rng.random())
        assert graph6_decode(graph6_encode(g)) == g


def test_round_trip_large_header(rng):
    for n in (63, 70, 100):
        g = oracles.random_graph(rng, n, 0.05)
        text = graph6_encode(g)
        assert text.startswith(chr(126))
        assert graph6_decode(text) == g


def test_matches_networkx(rng):
    for _ in range(100):
        g = oracles.random_graph(rng, rng.randint(1, 20), rng.random())
        mine = graph6_encode(g)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
        assert mine == theirs
        back = nx.from_graph6_bytes(mine.encode("ascii"))
        assert back.number_of_nodes() == g.n
        assert tuple(sorted(tuple(sorted(e)) for e in back.edges())) == g.edges


def test_decode_errors_carry_offsets():
    with pytest.raises(Graph6Error) as err:
        graph6_decode("A" + chr(30))
    assert "offset" in str(err.value)
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("D")  # truncated body
    with pytest.raises(Graph6Error):
        graph6_decode("A_X")  # trailing bytes


def test_decode_rejects_nonzero_padding():
    # n=2 uses one bit; set a padding bit below it
    with pytest.raises(Graph6Error):
        graph6_decode("A" + chr(63 + 33))
    assert graph6_decode("A" + chr(63 + 32)) == complete(2)


def test_every_emitted_line_is_ascii_printable():
    for g in (cycle(9), complete(7), Graph(5, ())):
        text = graph6_encode(g)
        assert all(63 <= ord(ch) <= 126 for ch in text)
