#include "textio/config_io.hpp"

namespace mcg::textio {

namespace {

std::string ints(const IntVec& v) {
  std::string s;
  for (auto x : v) s += " " + std::to_string(x);
  return s;
}

std::string free_words(const std::vector<FreeWord>& ws) {
  std::string s;
  for (auto& w : ws) {
    s += " [";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::to_string(w[k]);
    s += "]";
  }
  return s;
}

void print_matrix(std::string& out, const std::string& indent, const std::string& key, const IntMatrix& m) {
  out += indent + key + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (auto& r : m.to_rows()) out += indent + "  row" + ints(r) + "\n";
}

void print_table(std::string& out, const FreeAutomorphism& f) {
  out += "  images" + free_words(f.images) + "\n";
  out += "  inverses" + free_words(f.inverse_images) + "\n";
  out += "  framing" + ints(f.framing) + "\n";
}

IntVec read_ints(Cursor& c) {
  IntVec v;
  while (!c.eof()) v.push_back(c.integer());
  return v;
}

std::vector<FreeWord> read_free_words(Cursor& c) {
  std::vector<FreeWord> out;
  while (!c.eof()) {
    c.expect("[");
    FreeWord w;
    while (!c.at("]")) {
      long x = c.integer();
      if (x == 0) c.fail({"nonzero generator index"});
      w.push_back(int(x));
    }
    c.expect("]");
    out.push_back(w);
  }
  return out;
}

std::vector<std::string> read_names(Cursor& c, std::string_view stop = {}) {
  std::vector<std::string> out;
  while (!c.eof() && (stop.empty() || !c.at(stop))) out.push_back(c.ident());
  return out;
}

}  // namespace

std::string config_body(const SurfaceConfig& cfg) {
  std::string out;
  out += "name " + cfg.name + "\n";
  out += "genus " + std::to_string(cfg.genus) + "\n";
  out += "boundary_count " + std::to_string(cfg.boundary_count) + "\n";
  out += "boundary_names";
  for (auto& b : cfg.boundary_names) out += " " + b;
  out += "\n";
  print_matrix(out, "", "form", cfg.form);
  if (!cfg.pi1_generators.empty()) {
    out += "pi1_generators";
    for (auto& g : cfg.pi1_generators) out += " " + g;
    out += "\n";
    out += "boundary_word" + free_words({cfg.boundary_word}) + "\n";
  }
  for (auto& c : cfg.curves) {
    out += "curve " + c.name + "\n";
    out += "  class" + ints(c.homology) + "\n";
    if (c.separating) out += "  separating\n";
    if (c.boundary_parallel) out += "  boundary_parallel\n";
    if (c.pi1) print_table(out, *c.pi1);
  }
  for (auto& f : cfg.formals) {
    out += "formal " + f.name + "\n";
    if (f.h1) print_matrix(out, "  ", "h1", *f.h1);
    if (f.pi1) print_table(out, *f.pi1);
    for (auto& [a, b] : f.sends) out += "  sends " + a + " " + b + "\n";
  }
  for (auto& [a, b] : cfg.disjoint_pairs) out += "disjoint " + a + " " + b + "\n";
  for (auto& [a, b] : cfg.once_pairs) out += "once " + a + " " + b + "\n";
  for (auto& l : cfg.lanterns)
    out += "lantern " + l.holes[0] + " " + l.holes[1] + " " + l.holes[2] + " " + l.holes[3] + " : " + l.interiors[0] +
           " " + l.interiors[1] + " " + l.interiors[2] + "\n";
  for (auto& ch : cfg.chains) {
    out += "chain";
    for (auto& x : ch.chain) out += " " + x;
    out += " : " + ch.boundaries[0] + " " + ch.boundaries[1] + "\n";
  }
  return out;
}

bool ConfigReader::line(const std::string& kw, Cursor& c) {
  auto matrix_row = [&] {
    if (!matrix_) c.fail({"a matrix header before 'row'"});
    auto r = read_ints(c);
    if (int(r.size()) != matrix_->cols()) c.fail({std::to_string(matrix_->cols()) + " entries"});
    for (int j = 0; j < matrix_->cols(); ++j) (*matrix_)(rows_seen_, j) = r[j];
    if (++rows_seen_ == matrix_->rows()) matrix_ = nullptr;
  };
  auto matrix_header = [&](IntMatrix& m) {
    long r = c.integer(), k = c.integer();
    if (r < 0 || k < 0 || r > 4096 || k > 4096) c.fail({"matrix dimensions"});
    m = IntMatrix(int(r), int(k));
    matrix_ = r ? &m : nullptr;
    rows_seen_ = 0;
  };
  auto table = [&]() -> FreeAutomorphism& {
    if (!table_) c.fail({"a curve or formal before the table"});
    if (!*table_) *table_ = FreeAutomorphism{};
    return **table_;
  };

  if (kw == "row") {
    matrix_row();
    return true;
  }
  if (matrix_) c.fail({"'row'"});
  if (kw == "name") cfg_.name = c.token();
  else if (kw == "genus") cfg_.genus = int(c.integer());
  else if (kw == "boundary_count") cfg_.boundary_count = int(c.integer());
  else if (kw == "boundary_names") cfg_.boundary_names = read_names(c);
  else if (kw == "form") matrix_header(cfg_.form);
  else if (kw == "pi1_generators") cfg_.pi1_generators = read_names(c);
  else if (kw == "boundary_word") {
    auto w = read_free_words(c);
    if (w.size() != 1) c.fail({"one bracketed word"});
    cfg_.boundary_word = w[0];
  } else if (kw == "curve") {
    auto n = c.ident();
    try {
      cfg_.add_curve(n, {});
    } catch (const Error&) {
      c.fail({"a new curve name"});
    }
    owner_ = Owner::Curve;
    index_ = cfg_.curves.size() - 1;
    table_ = &cfg_.curves[index_].pi1;
  } else if (kw == "formal") {
    auto n = c.ident();
    try {
      cfg_.add_formal(n);
    } catch (const Error&) {
      c.fail({"a new formal name"});
    }
    owner_ = Owner::Formal;
    index_ = cfg_.formals.size() - 1;
    table_ = &cfg_.formals[index_].pi1;
  } else if (kw == "class" && owner_ == Owner::Curve) {
    cfg_.curves[index_].homology = read_ints(c);
  } else if (kw == "separating" && owner_ == Owner::Curve) {
    cfg_.curves[index_].separating = true;
  } else if (kw == "boundary_parallel" && owner_ == Owner::Curve) {
    cfg_.curves[index_].boundary_parallel = true;
  } else if (kw == "images") {
    table().images = read_free_words(c);
  } else if (kw == "inverses") {
    table().inverse_images = read_free_words(c);
  } else if (kw == "framing") {
    table().framing = read_ints(c);
  } else if (kw == "h1" && owner_ == Owner::Formal) {
    auto& f = cfg_.formals[index_];
    f.h1 = IntMatrix();
    matrix_header(*f.h1);
  } else if (kw == "sends" && owner_ == Owner::Formal) {
    auto a = c.ident(), b = c.ident();
    cfg_.formals[index_].sends.push_back({a, b});
  } else if (kw == "disjoint" || kw == "once") {
    auto a = c.ident(), b = c.ident();
    if (a == b) c.fail({"two different names"});
    if (kw == "once") cfg_.declare_once(a, b);
    else cfg_.declare_disjoint(a, b);
  } else if (kw == "lantern") {
    auto h = read_names(c, ":");
    c.expect(":");
    auto in = read_names(c);
    if (h.size() != 4 || in.size() != 3) c.fail({"four holes ':' three interior curves"});
    cfg_.lanterns.push_back({{h[0], h[1], h[2], h[3]}, {in[0], in[1], in[2]}});
  } else if (kw == "chain") {
    auto ch = read_names(c, ":");
    c.expect(":");
    auto b = read_names(c);
    if (ch.empty() || b.size() != 2) c.fail({"chain curves ':' two boundary curves"});
    cfg_.chains.push_back({ch, {b[0], b[1]}});
  } else {
    return false;
  }
  if (kw != "curve" && kw != "formal" && kw != "class" && kw != "separating" && kw != "boundary_parallel" &&
      kw != "images" && kw != "inverses" && kw != "framing" && kw != "h1" && kw != "sends") {
    owner_ = Owner::None;
    table_ = nullptr;
  }
  started_ = true;
  c.end();
  return true;
}

SurfaceConfig ConfigReader::finish(Cursor& at_end) {
  if (matrix_) at_end.fail({"'row'"});
  return cfg_;
}

}  // namespace mcg::textio
