import tempfile
import unittest
from pathlib import Path

from errors import ParseError
from algebra.ideals import ideal_equal
from lattices import Poset, lattice_from_poset
from readers import (
    FamilyReader,
    FiltrationReader,
    GraphReader,
    IdealReader,
    ImagesReader,
    LatticeReader,
    PosetReader,
    ReaderFactory,
    format_filtration,
    format_graph,
    format_poset,
    parse_name_list,
    parse_subset,
)
from tests.helpers import DATA_DIR, data_file, ideal, nonclosed6


class TestIdealReader(unittest.TestCase):
    def setUp(self):
        self.reader = IdealReader()

    def test_parse_with_order(self):
        parsed = self.reader.parse("ring: x1..x3\norder: revlex:x3>x2>x1\nx1*x3 - x2*x3\n")
        self.assertEqual(parsed.ring.names, ('x1', 'x2', 'x3'))
        self.assertEqual(parsed.order.priority, (2, 1, 0))
        self.assertEqual(len(parsed.ideal.generators), 1)

    def test_default_order_and_comments(self):
        parsed = self.reader.parse("# comment\nring: a, b\n\na*b  # trailing\n")
        self.assertEqual(parsed.order, parsed.ring.default_order())
        self.assertTrue(ideal_equal(parsed.ideal, ideal(parsed.ring, 'a*b')))

    def test_data_files(self):
        empty = self.reader.read(data_file('empty.ideal'))
        self.assertTrue(empty.ideal.is_zero())
        self.assertEqual(self.reader.stats['files_read'], 1)
        example = self.reader.read(data_file('colon_example.ideal'))
        self.assertEqual(example.order.spec(), 'revlex:x1>x2>x3')

    def test_errors_carry_positions(self):
        cases = [
            ("ring: x1..x3\norder: revlex:x1>w\n", 2),
            ("ring: x1..x3\norder: deglex:x1>x2>x3\n", 2),
            ("ring: x1..x3\nx1 +\n", 2),
            ("graph n=3\n", 1),
            ("", 1),
            ("ring: x1, x1\n", 1),
        ]
        for text, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as ctx:
                    self.reader.parse(text, source='t.ideal')
                self.assertEqual(ctx.exception.line, line)

    def test_name_lists(self):
        self.assertEqual(parse_name_list('x1..x2, y2..y1 t', 1, 1, None), ['x1', 'x2', 'y2', 'y1', 't'])


class TestImagesReader(unittest.TestCase):
    def test_data_file(self):
        images = ImagesReader().read(data_file('r52.images'))
        self.assertEqual(images.target.names, ('t1', 't2', 't3', 't4', 't5'))
        self.assertEqual(len(images.images), 10)
        self.assertIsNone(images.source_names)

    def test_source_names(self):
        parsed = ImagesReader().parse("target: s, t\nsource: a b\ns^2\ns*t\n")
        self.assertEqual(parsed.source_names, ['a', 'b'])

    def test_rejects_non_monomials_and_count_mismatch(self):
        with self.assertRaises(ParseError):
            ImagesReader().parse("target: s, t\ns + t\n")
        with self.assertRaises(ParseError):
            ImagesReader().parse("target: s, t\nsource: a\ns\nt\n")


class TestGraphReader(unittest.TestCase):
    def test_nonclosed6(self):
        self.assertEqual(GraphReader().read(data_file('nonclosed6.graph')), nonclosed6())

    def test_format_round_trip(self):
        G = nonclosed6()
        self.assertEqual(GraphReader().parse(format_graph(G)), G)

    def test_errors(self):
        with self.assertRaises(ParseError):
            GraphReader().parse("graph 3\n1 2\n")
        with self.assertRaises(ParseError):
            GraphReader().parse("graph n=3\na b\n")
        with self.assertRaises(ParseError) as ctx:
            GraphReader().parse("graph n=3\n1 2\n1 4\n")
        self.assertEqual((ctx.exception.line, ctx.exception.column), (3, 3))


class TestPosetReaders(unittest.TestCase):
    def test_posets(self):
        self.assertEqual(PosetReader().read(data_file('b3.poset')).elements, ('p1', 'p2', 'p3'))
        chain = PosetReader().read(data_file('chain3.poset'))
        self.assertEqual(chain.covers(), [('p1', 'p2'), ('p2', 'p3')])

    def test_format_round_trip(self):
        P = Poset(['a', 'b', 'c'], [('a', 'b'), ('a', 'c')])
        parsed = PosetReader().parse(format_poset(P))
        self.assertEqual(parsed.covers(), P.covers())

    def test_invalid_poset(self):
        with self.assertRaises(ParseError):
            PosetReader().parse("poset\na < b\nb < a\n")
        with self.assertRaises(ParseError):
            PosetReader().parse("poset\na > b\n")

    def test_underscore_names_build_a_lattice(self):
        P = PosetReader().parse("poset\nelements: a_b b_c\na_b < b_c\n")
        L = lattice_from_poset(P)
        self.assertEqual(L.elements, ('I_', 'I_a__b', 'I_a__b_b__c'))

    def test_lattice_file(self):
        L = LatticeReader().read(data_file('b2.lattice'))
        self.assertEqual(len(L), 4)
        self.assertTrue(L.is_isomorphic(lattice_from_poset(Poset.antichain(2))))

    def test_lattice_validation(self):
        with self.assertRaises(ParseError):
            LatticeReader().parse("lattice\nz < a\nz < b\nz < c\na < u\nb < u\nc < u\n")
        with self.assertRaises(ParseError):
            LatticeReader({'lattice': {'lattice_bound': 3}}).read(data_file('b2.lattice'))

    def test_family(self):
        family = FamilyReader().read(data_file('b3_reduced.family'))
        self.assertEqual(len(family), 19)
        self.assertEqual(family[0], frozenset())
        self.assertNotIn(frozenset({'I_', 'I_p3'}), family)

    def test_subsets(self):
        self.assertEqual(parse_subset('{}'), frozenset())
        self.assertEqual(parse_subset('{a, b}'), frozenset({'a', 'b'}))
        self.assertEqual(parse_subset('a,b'), frozenset({'a', 'b'}))


class TestFiltrationReader(unittest.TestCase):
    def test_golden_file(self):
        parsed = FiltrationReader().read(data_file('nonclosed6.filtration'))
        self.assertEqual(len(parsed.filtration), 20)
        self.assertEqual(parsed.filtration.name, 'nonclosed6')
        self.assertEqual(parsed.context.graph, nonclosed6())
        self.assertIn(parsed.context.host.zero_ideal(), parsed.filtration)
        self.assertIn(parsed.context.host.maximal_ideal(), parsed.filtration)

    def test_format_round_trip(self):
        parsed = FiltrationReader().read(data_file('nonclosed6.filtration'))
        text = format_filtration(parsed.filtration, 'nonclosed6.graph')
        again = FiltrationReader().parse(text, base_dir=DATA_DIR)
        self.assertEqual([m.key for m in again.filtration], [m.key for m in parsed.filtration])

    def test_ideal_quotient(self):
        with tempfile.TemporaryDirectory() as tmp:
            Path(tmp, 'q.ideal').write_text("ring: x, y\nx*y\n")
            Path(tmp, 'f.filtration').write_text("quotient: q.ideal\n0\nx\nm\n")
            parsed = FiltrationReader().read(Path(tmp, 'f.filtration'))
        self.assertIsNone(parsed.context)
        self.assertEqual(len(parsed.filtration), 3)

    def test_errors(self):
        with self.assertRaises(ParseError):
            FiltrationReader().parse("quotient: missing.graph\n0\n", base_dir=DATA_DIR)
        with self.assertRaises(ParseError) as ctx:
            FiltrationReader().parse("quotient: path3.graph\n0\nx1*y1\n", base_dir=DATA_DIR)
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(ParseError):
            FiltrationReader().parse("quotient: path3.graph\nz9\n", base_dir=DATA_DIR)


class TestReaderFactory(unittest.TestCase):
    def test_suffixes(self):
        self.assertIsInstance(ReaderFactory.create_reader('a.ideal'), IdealReader)
        self.assertIsInstance(ReaderFactory.create_reader('a.GRAPH'), GraphReader)
        self.assertIsInstance(ReaderFactory.create_reader('a.filtration', {}), FiltrationReader)
        self.assertIsInstance(ReaderFactory.create_reader('a.family'), FamilyReader)

    def test_unknown_suffix(self):
        with self.assertRaises(ValueError):
            ReaderFactory.create_reader('a.txt')
