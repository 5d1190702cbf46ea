#include "fwsubmix/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/objectives.hpp"

namespace fwsubmix {

namespace {

constexpr const char* kMagic = "fwsubmix-instance";
constexpr int kVersion = 1;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix(std::ostream& out, const char* name, const Matrix& m) {
  out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j == 0 ? "" : " ") << fmt(m(i, j));
    out << '\n';
  }
}

void write_vector(std::ostream& out, const char* name, const Vector& v) {
  out << "vector " << name << ' ' << v.size() << '\n';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i == 0 ? "" : " ") << fmt(v[i]);
  out << '\n';
}

void write_function(std::ostream& out, const char* slot, const DifferentiableFunction& f) {
  if (const auto* q = dynamic_cast<const QuadraticObjective*>(&f)) {
    out << slot << " quadratic\n";
    write_matrix(out, "H", q->hessian());
    write_vector(out, "h", q->linear_term());
    out << "scalar c " << fmt(q->constant()) << '\n';
  } else if (const auto* s = dynamic_cast<const SoftmaxExtension*>(&f)) {
    out << slot << " softmax\n";
    write_matrix(out, "L", s->kernel());
  } else if (const auto* c = dynamic_cast<const SimilarityConcave*>(&f)) {
    out << slot << " similarity\n";
    write_matrix(out, "L", c->kernel());
  } else if (const auto* d = dynamic_cast<const DOptimalObjective*>(&f)) {
    out << slot << " doptimal\n";
    write_matrix(out, "Y", d->design());
  } else if (const auto* b = dynamic_cast<const LogBarrierConcave*>(&f)) {
    out << slot << " logbarrier\n";
    out << "scalar n " << b->dimension() << '\n';
    out << "scalar scale " << fmt(b->scale()) << '\n';
  } else {
    throw Error("cannot serialize function '" + f.name() + "'");
  }
}

void write_region(std::ostream& out, const FeasibleRegion& r) {
  if (const auto* b = std::get_if<Box>(&r.kind())) {
    out << "region box\n";
    write_vector(out, "lower", b->lower);
    write_vector(out, "upper", b->upper);
  } else if (const auto* c = std::get_if<Cardinality>(&r.kind())) {
    out << "region cardinality\n";
    out << "scalar n " << c->n << '\n';
    out << "scalar budget " << fmt(c->budget) << '\n';
  } else if (const auto* p = std::get_if<Polytope>(&r.kind())) {
    out << "region polytope\n";
    write_matrix(out, "A", p->a);
    write_vector(out, "b", p->b);
    write_vector(out, "u", p->u);
  }
}

// ------------------------------------------------------------------ reader

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split on whitespace. Empty at EOF.
  std::vector<std::string> next() {
    if (pending_) {
      auto tokens = std::move(*pending_);
      pending_.reset();
      return tokens;
    }
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    ++line_;
    return {};
  }

  std::vector<std::string> expect(std::string_view keyword, std::size_t arity) {
    auto tokens = next();
    if (tokens.empty()) fail("unexpected end of input, expected '" + std::string(keyword) + "'");
    if (tokens.front() != keyword) {
      fail("expected '" + std::string(keyword) + "', found '" + tokens.front() + "'");
    }
    if (tokens.size() != arity + 1) {
      fail("'" + std::string(keyword) + "' takes " + std::to_string(arity) + " argument(s)");
    }
    return tokens;
  }

  double number(const std::string& tok) const {
    double v = 0.0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end) fail("malformed number '" + tok + "'");
    return v;
  }

  long count(const std::string& tok) const {
    long v = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end || v < 0) fail("malformed count '" + tok + "'");
    return v;
  }

  void check_name(const std::vector<std::string>& header, std::string_view name) const {
    if (header[1] != name) {
      fail("expected block '" + std::string(name) + "', found '" + header[1] + "'");
    }
  }

  Matrix matrix(std::string_view name) {
    const auto header = expect("matrix", 3);
    check_name(header, name);
    const long rows = count(header[2]);
    const long cols = count(header[3]);
    Matrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
      const auto tokens = next();
      if (tokens.size() != static_cast<std::size_t>(cols)) {
        fail("matrix " + std::string(name) + " row " + std::to_string(i) + " has " +
             std::to_string(tokens.size()) + " values, expected " + std::to_string(cols));
      }
      for (long j = 0; j < cols; ++j) m(i, j) = number(tokens[static_cast<std::size_t>(j)]);
    }
    return m;
  }

  Vector vector(std::string_view name) {
    const auto header = expect("vector", 2);
    check_name(header, name);
    const long len = count(header[2]);
    Vector v(len);
    if (len == 0) return v;
    const auto tokens = next();
    if (tokens.size() != static_cast<std::size_t>(len)) {
      fail("vector " + std::string(name) + " has " + std::to_string(tokens.size()) +
           " values, expected " + std::to_string(len));
    }
    for (long i = 0; i < len; ++i) v[i] = number(tokens[static_cast<std::size_t>(i)]);
    return v;
  }

  double scalar(std::string_view name) {
    const auto tokens = expect("scalar", 2);
    check_name(tokens, name);
    return number(tokens[2]);
  }

  std::size_t size(std::string_view name) {
    const auto tokens = expect("scalar", 2);
    check_name(tokens, name);
    return static_cast<std::size_t>(count(tokens[2]));
  }

  // Hands `tokens` back so the following next() returns them again.
  void unget(std::vector<std::string> tokens) { pending_ = std::move(tokens); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::optional<std::vector<std::string>> pending_;
};

FunctionPtr read_function(Reader& r, std::string_view slot) {
  const auto header = r.expect(slot, 1);
  const std::size_t at = r.line();
  const std::string& kind = header[1];
  try {
    if (kind == "quadratic") {
      Matrix h = r.matrix("H");
      Vector lin = r.vector("h");
      const double c = r.scalar("c");
      return std::make_shared<QuadraticObjective>(std::move(h), std::move(lin), c);
    }
    if (kind == "softmax") return std::make_shared<SoftmaxExtension>(r.matrix("L"));
    if (kind == "similarity") return std::make_shared<SimilarityConcave>(r.matrix("L"));
    if (kind == "doptimal") return std::make_shared<DOptimalObjective>(r.matrix("Y"));
    if (kind == "logbarrier") {
      const std::size_t n = r.size("n");
      return std::make_shared<LogBarrierConcave>(n, r.scalar("scale"));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(at, std::string(slot) + " " + kind + ": " + e.what());
  }
  r.fail("unknown function kind '" + kind + "'");
}

FeasibleRegion read_region(Reader& r) {
  const auto header = r.expect("region", 1);
  const std::size_t at = r.line();
  const std::string& kind = header[1];
  try {
    if (kind == "box") {
      Vector lower = r.vector("lower");
      return FeasibleRegion::box(std::move(lower), r.vector("upper"));
    }
    if (kind == "cardinality") {
      const std::size_t n = r.size("n");
      return FeasibleRegion::cardinality(n, r.scalar("budget"));
    }
    if (kind == "polytope") {
      Matrix a = r.matrix("A");
      Vector b = r.vector("b");
      return FeasibleRegion::polytope(std::move(a), std::move(b), r.vector("u"));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(at, "region " + kind + ": " + e.what());
  }
  r.fail("unknown region kind '" + kind + "'");
}

bool parse_flag(const Reader& r, const std::string& tok, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) r.fail("expected flag '" + std::string(key) + "=0|1'");
  const std::string value = tok.substr(prefix.size());
  if (value == "1") return true;
  if (value == "0") return false;
  r.fail("flag '" + std::string(key) + "' must be 0 or 1");
}

}  // namespace

void write_instance(std::ostream& out, const ProblemInstance& problem) {
  const ObjectivePair& obj = problem.objective();
  const ObjectiveFlags& f = obj.flags();
  out << kMagic << ' ' << kVersion << '\n';
  out << "lambda " << fmt(obj.lambda()) << '\n';
  out << "flags g_monotone=" << f.g_monotone << " g_nonneg=" << f.g_nonneg
      << " c_monotone=" << f.c_monotone << " c_nonneg=" << f.c_nonneg << '\n';
  if (obj.smoothness()) out << "smoothness " << fmt(*obj.smoothness()) << '\n';
  write_function(out, "g", obj.g());
  write_function(out, "c", obj.c());
  write_region(out, problem.region());
  out << "end\n";
}

ProblemInstance read_instance(std::istream& in) {
  Reader r(in);
  const auto magic = r.expect(kMagic, 1);
  if (r.count(magic[1]) != kVersion) r.fail("unsupported format version " + magic[1]);
  const double lambda = r.number(r.expect("lambda", 1)[1]);
  const auto flag_tokens = r.expect("flags", 4);
  ObjectiveFlags flags{
      parse_flag(r, flag_tokens[1], "g_monotone"),
      parse_flag(r, flag_tokens[2], "g_nonneg"),
      parse_flag(r, flag_tokens[3], "c_monotone"),
      parse_flag(r, flag_tokens[4], "c_nonneg"),
  };

  std::optional<double> smoothness;
  auto tokens = r.next();
  if (!tokens.empty() && tokens.front() == "smoothness") {
    if (tokens.size() != 2) r.fail("'smoothness' takes 1 argument(s)");
    smoothness = r.number(tokens[1]);
  } else {
    r.unget(std::move(tokens));
  }

  FunctionPtr g = read_function(r, "g");
  FunctionPtr c = read_function(r, "c");
  FeasibleRegion region = read_region(r);
  const auto end = r.next();
  if (end.size() != 1 || end.front() != "end") r.fail("expected 'end'");
  if (!r.next().empty()) r.fail("trailing content after 'end'");

  try {
    return ProblemInstance(ObjectivePair(std::move(g), std::move(c), lambda, flags, smoothness),
                           std::move(region));
  } catch (const Error& e) {
    throw ParseError(0, std::string("inconsistent instance: ") + e.what());
  }
}

void save_instance(const std::filesystem::path& path, const ProblemInstance& problem) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_instance(out, problem);
  if (!out) throw Error("failed writing " + path.string());
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_instance(in);
}

}  // namespace fwsubmix
