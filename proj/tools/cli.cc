// Copyright 2026 The maxconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxconv/convolution.hpp"
#include "maxconv/errors.hpp"
#include "maxconv/matrix.hpp"
#include "maxconv/oracle.hpp"
#include "maxconv/poly.hpp"
#include "maxconv/spectra.hpp"
#include "verify.hpp"

namespace maxconv::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr char kFixedSeed[] = "fixed-counterexample-mode";

std::string read_input(const std::string& arg, std::istream& in, bool inline_ok) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    std::ostringstream buf;
    buf << file.rdbuf();
    if (!file) throw ParseError("cannot read " + arg);
    return buf.str();
  }
  if (inline_ok) return arg;
  throw ParseError("no such file: " + arg);
}

Json coeffs_json(const std::vector<MaxScalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Json matrix_json(const MaxMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json blocks_json(const std::vector<std::vector<std::size_t>>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

Json perm_json(const Permutation& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p[i] + 1);
  return out;
}

// Shared option storage; only one leaf command is parsed per run.
struct State {
  std::vector<std::string> operands;
  std::size_t k = 1;
  std::string x;
  bool json = false;
  bool oracle = false;
  bool certificate = false;
  std::size_t cap = 0;
  std::string theorem;
  std::size_t n = 3;
  std::size_t trials = 100;
  std::string seed = "1";
  bool negative_control = false;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void add_input(Json j) { inputs_.push_back(std::move(j)); }

  void poly(const Maxpolynomial& p, const ConvResult* conv = nullptr,
            const std::vector<std::string>& labels = {}) {
    const bool fcf = is_fcf(p);
    if (json_) {
      Json doc{{"inputs", inputs_},
               {"result_coeffs", coeffs_json(p.coeffs())},
               {"fcf", fcf}};
      doc["roots"] = p.is_null() ? Json(nullptr) : coeffs_json(roots(p));
      if (conv && !conv->certificate.empty()) {
        Json cert = Json::array();
        for (const auto& perms : conv->certificate) {
          Json entry = Json::object();
          for (std::size_t i = 0; i < perms.size(); ++i) {
            entry[labels.at(i)] = perm_json(perms[i]);
          }
          cert.push_back(std::move(entry));
        }
        doc["certificate"] = std::move(cert);
      }
      out_ << doc.dump(2) << "\n";
      return;
    }
    out_ << to_string(p) << "\n";
    out_ << "# monomial: " << format_monomial(p) << "\n";
    if (const auto f = format_factored(p)) out_ << "# factored: " << *f << "\n";
    if (conv) {
      for (std::size_t k = 0; k < conv->certificate.size(); ++k) {
        const auto& perms = conv->certificate[k];
        if (perms.empty()) continue;
        out_ << "# certificate x^" << k << ":";
        for (std::size_t i = 0; i < perms.size(); ++i) {
          out_ << (i ? ", " : " ") << labels.at(i) << " = " << to_string(perms[i]);
        }
        out_ << "\n";
      }
    }
  }

  void scalar(const MaxScalar& s) {
    if (json_) {
      out_ << Json{{"inputs", inputs_}, {"result", to_string(s)}}.dump(2) << "\n";
    } else {
      out_ << to_string(s) << "\n";
    }
  }

  void roots_list(const RootList& r) {
    if (json_) {
      out_ << Json{{"inputs", inputs_}, {"roots", coeffs_json(r)}}.dump(2) << "\n";
    } else {
      out_ << to_string(r) << "\n";
    }
  }

  void boolean(bool b, std::optional<std::size_t> failing_order = std::nullopt) {
    if (json_) {
      Json doc{{"inputs", inputs_}, {"result", b}};
      if (failing_order) doc["failing_order"] = *failing_order;
      out_ << doc.dump(2) << "\n";
      return;
    }
    out_ << (b ? "true" : "false") << "\n";
    if (failing_order) out_ << "# first failing order: " << *failing_order << "\n";
  }

  void partitions(const PartitionSet& set) {
    if (json_) {
      Json list = Json::array();
      for (const auto& p : set.partitions) list.push_back(blocks_json(p.blocks));
      out_ << Json{{"inputs", inputs_}, {"partitions", list},
                   {"truncated", set.truncated}}.dump(2)
           << "\n";
      return;
    }
    for (const auto& p : set.partitions) out_ << to_string(p.blocks) << "\n";
    if (set.truncated) out_ << "# truncated\n";
  }

  void orientation(const Orientation& o) {
    if (json_) {
      out_ << Json{{"inputs", inputs_},
                   {"p0", perm_json(o.p0)},
                   {"q0", perm_json(o.q0)},
                   {"partition", blocks_json(o.shared.a_side.blocks)}}
                      .dump(2)
           << "\n";
      return;
    }
    out_ << "P0 = " << to_string(o.p0) << "\n";
    out_ << "Q0 = " << to_string(o.q0) << "\n";
    out_ << "partition = " << to_string(o.shared.a_side.blocks) << "\n";
  }

  void matrix(const MaxMatrix& m) {
    out_ << format_matrix(m);
  }

 private:
  std::ostream& out_;
  bool json_;
  Json inputs_ = Json::array();
};

// Brute-force counterparts for `matrix --oracle`.
Maxpolynomial char_poly_bf(const MaxMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<MaxScalar> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = oracle::delta_bf(a, k);
  return Maxpolynomial(std::move(c));
}

Maxpolynomial full_char_poly_bf(const MaxMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<MaxScalar> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = oracle::eta_bf(a, k);
  return Maxpolynomial(std::move(c));
}

std::optional<std::size_t> dominance_failure_bf(const MaxMatrix& a) {
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (oracle::delta_bf(a, k) != oracle::eta_bf(a, k)) return k;
  }
  return std::nullopt;
}

std::uint64_t parse_seed(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("seed must be a non-negative integer or " +
                     std::string(kFixedSeed));
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ParseError("seed out of range: " + s);
  }
}

// CLI11 reads "-inf" and ".5"-style tokens as short options.
std::vector<std::string> protect_scalars(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' &&
        (a.rfind("-inf", 0) == 0 || !std::isalpha(static_cast<unsigned char>(a[1])))) {
      a.insert(a.begin(), ' ');
    }
  }
  return args;
}

class Commands {
 public:
  Commands(std::istream& in, std::ostream& out) : in_(in), out_(out) {
    app_.require_subcommand(1);
    add_poly();
    add_matrix();
    add_conv();
    add_verify();
  }

  CLI::App& app() { return app_; }

  int dispatch() {
    for (auto& [sub, action] : leaves_) {
      if (sub->parsed()) return action();
    }
    return kFailure;
  }

 private:
  using Action = std::function<int()>;

  CLI::App* leaf(CLI::App* parent, const std::string& name,
                 const std::string& help, Action action) {
    auto* sub = parent->add_subcommand(name, help);
    leaves_.emplace_back(sub, std::move(action));
    return sub;
  }

  Maxpolynomial poly_operand(std::size_t i, Emitter& e) {
    const auto p = parse_poly(read_input(st_.operands.at(i), in_, true));
    e.add_input(coeffs_json(p.coeffs()));
    return p;
  }

  MaxMatrix matrix_operand(std::size_t i, Emitter& e) {
    const auto m = parse_matrix(read_input(st_.operands.at(i), in_, false));
    e.add_input(matrix_json(m));
    return m;
  }

  void add_poly() {
    auto* poly = app_.add_subcommand("poly", "Maxpolynomial operations");
    poly->require_subcommand(1);
    auto unary = [&](const std::string& name, const std::string& help,
                     std::function<void(const Maxpolynomial&, Emitter&)> f) {
      auto* sub = leaf(poly, name, help, [this, f] {
        Emitter e(out_, st_.json);
        f(poly_operand(0, e), e);
        return kOk;
      });
      sub->add_option("poly", st_.operands, "coefficients a0, a1, ... or a file")
          ->required()
          ->expected(1);
      sub->add_flag("--json", st_.json, "structured output");
      return sub;
    };
    auto binary = [&](const std::string& name, const std::string& help,
                      std::function<Maxpolynomial(const Maxpolynomial&,
                                                  const Maxpolynomial&)> f) {
      auto* sub = leaf(poly, name, help, [this, f] {
        Emitter e(out_, st_.json);
        const auto p = poly_operand(0, e);
        const auto q = poly_operand(1, e);
        e.poly(f(p, q));
        return kOk;
      });
      sub->add_option("polys", st_.operands, "two polynomials")->required()->expected(2);
      sub->add_flag("--json", st_.json, "structured output");
      return sub;
    };

    unary("roots", "tropical roots, non-increasing",
          [](const Maxpolynomial& p, Emitter& e) { e.roots_list(roots(p)); });
    unary("fcf", "full canonical form test",
          [](const Maxpolynomial& p, Emitter& e) { e.boolean(is_fcf(p)); });
    unary("concavify", "canonical representative",
          [](const Maxpolynomial& p, Emitter& e) { e.poly(concavify(p)); });
    unary("derive", "k-th formal derivative",
          [this](const Maxpolynomial& p, Emitter& e) { e.poly(derivative(p, st_.k)); })
        ->add_option("--k", st_.k, "order")
        ->capture_default_str();
    unary("eval", "evaluate at x",
          [this](const Maxpolynomial& p, Emitter& e) {
            e.scalar(evaluate(p, parse_scalar(st_.x)));
          })
        ->add_option("--x", st_.x, "point")
        ->required();
    binary("add", "p (+) q", poly_add);
    binary("mul", "p q", poly_mul);
    binary("hadamard", "coefficientwise product", hadamard_poly);
    binary("conv", "k-th max convolution", [this](const Maxpolynomial& p,
                                                 const Maxpolynomial& q) {
      return max_convolve(p, q, st_.k);
    })->add_option("--k", st_.k, "order")->required();
  }

  void add_matrix() {
    auto* mat = app_.add_subcommand("matrix", "Matrix minors and spectra");
    mat->require_subcommand(1);
    auto cmd = [&](const std::string& name, const std::string& help,
                   std::function<void(const MaxMatrix&, Emitter&)> f) {
      auto* sub = leaf(mat, name, help, [this, f] {
        Emitter e(out_, st_.json);
        f(matrix_operand(0, e), e);
        return kOk;
      });
      sub->add_option("file", st_.operands, "matrix file, or - for stdin")
          ->required()
          ->expected(1);
      sub->add_flag("--json", st_.json, "structured output");
      sub->add_flag("--oracle", st_.oracle, "use brute-force enumeration");
      sub->add_option("--cap", st_.cap, "enumeration cap");
      return sub;
    };
    auto delta_cap = [this] { return st_.cap ? st_.cap : kDefaultDeltaCap; };

    cmd("charpoly", "characteristic maxpolynomial",
        [this, delta_cap](const MaxMatrix& a, Emitter& e) {
          e.poly(st_.oracle ? char_poly_bf(a) : char_poly(a, delta_cap()));
        });
    cmd("fullcharpoly", "full characteristic maxpolynomial",
        [this](const MaxMatrix& a, Emitter& e) {
          e.poly(st_.oracle ? full_char_poly_bf(a) : full_char_poly(a));
        });
    cmd("grampoly", "characteristic maxpolynomial of the Gram root",
        [this](const MaxMatrix& a, Emitter& e) {
          e.poly(st_.oracle ? char_poly_bf(hat(a)) : gram_char_poly(a));
        });
    cmd("permanent", "max-plus permanent", [this](const MaxMatrix& a, Emitter& e) {
      e.scalar(st_.oracle ? oracle::permanent_bf(a) : permanent(a));
    });
    cmd("eta", "maximal minor of order k", [this](const MaxMatrix& a, Emitter& e) {
      e.scalar(st_.oracle ? oracle::eta_bf(a, st_.k) : eta(a, st_.k));
    })->add_option("--k", st_.k, "order")->required();
    cmd("delta", "maximal principal minor of order k",
        [this, delta_cap](const MaxMatrix& a, Emitter& e) {
          e.scalar(st_.oracle ? oracle::delta_bf(a, st_.k)
                              : delta(a, st_.k, delta_cap()));
        })
        ->add_option("--k", st_.k, "order")
        ->required();
    cmd("pd-check", "principal dominance",
        [this, delta_cap](const MaxMatrix& a, Emitter& e) {
          const auto k = st_.oracle ? dominance_failure_bf(a)
                                    : dominance_failure(a, delta_cap());
          e.boolean(!k.has_value(), k);
        });
    cmd("partitions", "max-column partitions", [this](const MaxMatrix& a, Emitter& e) {
      e.partitions(st_.oracle ? oracle::column_partitions_bf(a)
                              : max_column_partitions(
                                    a, st_.cap ? st_.cap : kDefaultPartitionCap));
    });
    cmd("nu", "largest eigenvalue", [this, delta_cap](const MaxMatrix& a, Emitter& e) {
      if (!st_.oracle) return e.scalar(nu(a, delta_cap()));
      const auto chi = char_poly_bf(a);
      e.scalar(chi.degree() > 0 ? oracle::roots_bf(chi).front() : MaxScalar());
    });
    cmd("norm", "largest entry", [](const MaxMatrix& a, Emitter& e) {
      e.scalar(norm(a));
    });
    cmd("format", "canonical matrix document", [](const MaxMatrix& a, Emitter& e) {
      e.matrix(a);
    });
  }

  void add_conv() {
    auto* conv = app_.add_subcommand("conv", "Matrix sides of the convolution identities");
    conv->require_subcommand(1);
    using Op = ConvResult (*)(const MaxMatrix&, const MaxMatrix&, const ConvOptions&);
    auto cmd = [&](const std::string& name, const std::string& help, Op op,
                   std::vector<std::string> labels) {
      auto* sub = leaf(conv, name, help, [this, op, labels] {
        Emitter e(out_, st_.json);
        const auto a = matrix_operand(0, e);
        const auto b = matrix_operand(1, e);
        const auto r = op(a, b, options());
        e.poly(r.poly, &r, labels);
        return kOk;
      });
      sub->add_option("files", st_.operands, "matrices A and B")->required()->expected(2);
      common(sub);
    };
    cmd("additive", "max over P,Q of the full char poly of A (+) PBQ",
        additive_conv_rhs, {"P", "Q"});
    cmd("pd", "max over P of the char poly of A (+) PBP^T", pd_conv_rhs, {"P"});
    cmd("maxrow", "max over P of the Gram char poly of (A (+) PB)^T", max_row_conv,
        {"P"});
    cmd("hadamard", "max over P,Q of the full char poly of A o PBQ",
        hadamard_conv_rhs, {"P", "Q"});
    cmd("mult", "max over P of the full char poly of APB", mult_conv_rhs, {"P"});

    auto* multi = leaf(conv, "multi", "iterated additive convolution", [this] {
      Emitter e(out_, st_.json);
      std::vector<MaxMatrix> ms;
      for (std::size_t i = 0; i < st_.operands.size(); ++i) {
        ms.push_back(matrix_operand(i, e));
      }
      const auto r = additive_conv_multi(ms, options());
      std::vector<std::string> labels;
      for (std::size_t i = 1; i < ms.size(); ++i) {
        labels.push_back("P" + std::to_string(i));
        labels.push_back("Q" + std::to_string(i));
      }
      e.poly(r.poly, &r, labels);
      return kOk;
    });
    multi->add_option("files", st_.operands, "matrices")->required();
    common(multi);

    auto* orient = leaf(conv, "orient", "orienting permutations P0, Q0", [this] {
      Emitter e(out_, st_.json);
      const auto a = matrix_operand(0, e);
      const auto b = matrix_operand(1, e);
      e.orientation(orienting_permutations(
          a, b, st_.cap ? st_.cap : kDefaultPartitionCap));
      return kOk;
    });
    orient->add_option("files", st_.operands, "matrices A and B")
        ->required()
        ->expected(2);
    orient->add_flag("--json", st_.json, "structured output");
    orient->add_option("--cap", st_.cap, "partition cap");
  }

  void common(CLI::App* sub) {
    sub->add_flag("--json", st_.json, "structured output");
    sub->add_flag("--certificate", st_.certificate, "attaining permutations");
    sub->add_option("--cap", st_.cap, "largest order to enumerate");
  }

  ConvOptions options() const {
    ConvOptions o;
    o.max_order = st_.cap;
    o.certificate = st_.certificate;
    return o;
  }

  void add_verify() {
    auto* sub = leaf(&app_, "verify", "Check an identity on generated instances", [this] {
      verify::Options o;
      o.n = st_.n;
      o.trials = st_.trials;
      o.cap = st_.cap;
      o.negative_control = st_.negative_control;
      if (st_.seed == kFixedSeed) {
        o.fixed_pair = true;
        o.negative_control = true;
      } else {
        o.seed = parse_seed(st_.seed);
      }
      const auto report = verify::run(st_.theorem, o);
      verify::print_report(report, out_);
      if (o.negative_control) return kOk;
      return report.all_passed() ? kOk : kFailure;
    });
    sub->add_option("theorem", st_.theorem, "identity to check")
        ->required()
        ->check(CLI::IsMember(verify::theorem_names()));
    sub->add_option("--n", st_.n, "matrix order")->capture_default_str();
    sub->add_option("--trials", st_.trials, "instances")->capture_default_str();
    sub->add_option("--seed", st_.seed, "base seed")->capture_default_str();
    sub->add_option("--cap", st_.cap, "largest order to enumerate");
    sub->add_flag("--negative-control", st_.negative_control,
                  "drop the hypothesis and report violations");
  }

  std::istream& in_;
  std::ostream& out_;
  State st_;
  CLI::App app_{"Exact max-plus polynomials, matrices and convolutions", "maxconv"};
  std::vector<std::pair<CLI::App*, Action>> leaves_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Commands commands(in, out);
  auto& app = commands.app();
  try {
    auto reversed = protect_scalars(args);
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    return commands.dispatch();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace maxconv::cli
