#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbk/closure.hpp"
#include "fbk/error.hpp"
#include "fbk/fuzz.hpp"
#include "fbk/garside.hpp"
#include "fbk/hilden.hpp"
#include "fbk/moves.hpp"
#include "fbk/plat.hpp"
#include "fbk/report.hpp"
#include "fbk/word_syntax.hpp"

namespace py = pybind11;
using namespace fbk;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

FramedBraid element(const std::string& word, int n) { return normalize(parse_word(word, n)); }

FramingConvention convention(const std::string& s) {
  if (s == "blackboard") return FramingConvention::Blackboard;
  if (s == "integer") return FramingConvention::Integer;
  throw InvalidArgument("convention must be 'blackboard' or 'integer'");
}

}  // namespace

PYBIND11_MODULE(fbk, m) {
  m.doc() = "Framed braid groups: word problem, moves, closure and plat invariants";

  // Translators run newest first, so the subclass goes last.
  py::register_exception<Error>(m, "FbkError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<FramedBraid>(m, "FramedBraid")
      .def(py::init([](const std::string& word, int n) { return element(word, n); }),
           py::arg("word"), py::arg("n"))
      .def_property_readonly("strands", &FramedBraid::strands)
      .def_property_readonly("framing", [](const FramedBraid& b) { return b.lambda(); })
      .def_property_readonly("beta", [](const FramedBraid& b) { return print_word(b.beta()); })
      .def_property_readonly("word", [](const FramedBraid& b) { return print_word(b.spelled()); })
      .def("__mul__", &multiply)
      .def("inverse", &inverse)
      .def("__eq__", &framed_equal)
      .def("__repr__", [](const FramedBraid& b) {
        return "FramedBraid('" + print_word(b.spelled()) + "', " + std::to_string(b.strands()) + ")";
      })
      .def("to_dict", [](const FramedBraid& b) { return to_python(to_json(b)); });

  m.def("parse", [](const std::string& text, int n) { return print_word(parse_word(text, n)); },
        py::arg("text"), py::arg("n"), "Canonical text of a word; raises ParseError.");
  m.def("normalize", &element, py::arg("word"), py::arg("n"));
  m.def("are_equal",
        [](const std::string& a, const std::string& b, int n) {
          return framed_equal(element(a, n), element(b, n));
        },
        py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("normal_form",
        [](const std::string& word, int n) { return to_python(to_json(element(word, n))); },
        py::arg("word"), py::arg("n"));
  m.def("closure_signature",
        [](const FramedBraid& b, const std::string& conv) {
          return to_python(to_json(closure_signature(b, convention(conv))));
        },
        py::arg("element"), py::arg("convention") = "blackboard");
  m.def("knot_framing", &knot_framing);
  m.def("plat_signature", [](const FramedBraid& b) { return to_python(to_json(plat_signature(b))); });
  m.def("signatures_match", [](const FramedBraid& a, const FramedBraid& b) {
    return signatures_match(closure_signature(a), closure_signature(b));
  });
  m.def("plat_signatures_match", [](const FramedBraid& a, const FramedBraid& b) {
    return plat_signatures_match(plat_signature(a), plat_signature(b));
  });

  m.def("apply_move",
        [](const FramedBraid& a, const std::string& kind, std::size_t split, int index, int sign,
           int k, const std::string& side, std::optional<FramedBraid> conjugator) {
          const auto mk = move_kind_from_string(kind);
          if (!mk) throw InvalidArgument("unknown move kind " + kind);
          MoveDescriptor d;
          d.kind = *mk;
          d.split = split;
          d.i = index;
          d.sign = sign;
          d.k = k;
          d.side = side == "left" ? InclusionSide::Left : InclusionSide::Right;
          d.conjugator = std::move(conjugator);
          return apply_move(a, d);
        },
        py::arg("element"), py::arg("kind"), py::arg("split") = 0, py::arg("index") = 1,
        py::arg("sign") = 1, py::arg("k") = 0, py::arg("side") = "right",
        py::arg("conjugator") = py::none());
  m.def("conjugate", &conjugate);
  m.def("tau_conjugation", [](const FramedBraid& a, int i, int exponent) {
    std::vector<FramedBraid> out;
    for (const auto& s : tau_conjugation_as_RL_sequence(a, i, exponent)) out.push_back(s.element);
    return out;
  });
  m.def("solve_framing_transfer",
        [](const std::vector<int>& permutation, const FramingVector& delta,
           const FramingVector& kappa) {
          return solve_framing_transfer(Permutation(permutation), delta, kappa);
        },
        py::arg("permutation"), py::arg("delta"), py::arg("kappa"));

  m.def("hilden_verify",
        [](const std::string& suite, int n) {
          const auto s = relation_suite_from_string(suite);
          if (!s) throw InvalidArgument("unknown suite " + suite);
          return to_python(to_json(verify_relation_suite(GeneratorDictionary::builtin(n), *s)));
        },
        py::arg("suite"), py::arg("n"));
  m.def("plat_trivializes", &plat_trivializes);

  m.def("fuzz",
        [](std::uint64_t seed, int trials, std::map<std::string, double> mix, int jobs) {
          FuzzConfig c;
          c.seed = seed;
          c.trials = trials;
          c.jobs = jobs;
          for (const auto& [name, w] : mix) {
            const auto mode = fuzz_mode_from_string(name);
            if (!mode) throw InvalidArgument("unknown fuzz mode " + name);
            c.move_mix[*mode] = w;
          }
          FuzzReport r;
          {
            py::gil_scoped_release release;
            r = run_fuzz(c);
          }
          return to_python(r.to_json());
        },
        py::arg("seed") = 0, py::arg("trials") = 100,
        py::arg("mix") = std::map<std::string, double>{}, py::arg("jobs") = 1);
}
