// Copyright 2026 The ssrbell developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssrbell/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace ssrbell {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

constexpr const char *kMagic = "ssrbell-state v1";

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

struct Parser {
  std::string path;
  std::istringstream stream;
  int line_no = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw IoError(path + ":" + std::to_string(line_no) + ": " + msg);
  }

  bool next_line(std::vector<std::string> &tokens) {
    std::string line;
    while (std::getline(stream, line)) {
      ++line_no;
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  double parse_double(const std::string &tok) const {
    try {
      size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) fail("trailing characters in number '" + tok + "'");
      return v;
    } catch (const std::invalid_argument &) {
      fail("expected a number, got '" + tok + "'");
    } catch (const std::out_of_range &) {
      fail("number out of range: '" + tok + "'");
    }
  }

  int parse_int(const std::string &tok) const {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) fail("trailing characters in integer '" + tok + "'");
      return v;
    } catch (const std::invalid_argument &) {
      fail("expected an integer, got '" + tok + "'");
    } catch (const std::out_of_range &) {
      fail("integer out of range: '" + tok + "'");
    }
  }
};

}  // namespace

DensityOperator LoadedState::as_density() const {
  switch (kind) {
    case StateKind::Pure:
      return DensityOperator::from_pure(*pure);
    case StateKind::Density:
      return *density;
    case StateKind::Minimal:
      return minimal_to_density(*minimal);
  }
  throw std::logic_error("unreachable");
}

LoadedState load_state(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  Parser p;
  p.path = path;
  p.stream = std::istringstream(buf.str());

  std::vector<std::string> tok;
  if (!p.next_line(tok) || tok.size() < 2 || tok[0] + " " + tok[1] != kMagic) {
    p.fail(std::string("missing header '") + kMagic + "'");
  }
  if (!p.next_line(tok) || tok.size() != 2 || tok[0] != "kind") {
    p.fail("expected 'kind pure|density|minimal'");
  }
  const std::string kind = tok[1];

  LoadedState out;
  if (kind == "minimal") {
    std::map<std::string, double> fields;
    while (p.next_line(tok)) {
      if (tok.size() != 2) p.fail("expected '<name> <value>'");
      fields[tok[0]] = p.parse_double(tok[1]);
    }
    for (const char *key : {"p00", "p11", "p_phi", "r0", "r1"}) {
      if (!fields.count(key)) p.fail(std::string("missing field '") + key + "'");
    }
    out.kind = StateKind::Minimal;
    out.minimal = MinimalReference(fields["p00"], fields["p11"],
                                   fields["p_phi"], fields["r0"], fields["r1"]);
    return out;
  }
  if (kind != "pure" && kind != "density") {
    p.fail("unknown kind '" + kind + "'");
  }

  int dim_a = -1, dim_b = -1;
  std::vector<std::vector<std::string>> entries;
  while (p.next_line(tok)) {
    if (tok[0] == "dim_a" && tok.size() == 2) {
      dim_a = p.parse_int(tok[1]);
    } else if (tok[0] == "dim_b" && tok.size() == 2) {
      dim_b = p.parse_int(tok[1]);
    } else if (tok[0] == "entry") {
      entries.push_back(tok);
    } else {
      p.fail("unexpected line starting with '" + tok[0] + "'");
    }
  }
  if (dim_a < 1 || dim_b < 1) p.fail("dim_a and dim_b must be given and >= 1");
  FockCutoff cutoff(dim_a, dim_b);
  const int d = cutoff.total_dim();

  if (kind == "pure") {
    Vector amps = Vector::Zero(d);
    for (const auto &e : entries) {
      if (e.size() != 4) p.fail("pure entry needs '<index> <re> <im>'");
      int idx = p.parse_int(e[1]);
      if (idx < 0 || idx >= d) p.fail("index " + e[1] + " out of range");
      amps(idx) = Complex(p.parse_double(e[2]), p.parse_double(e[3]));
    }
    out.kind = StateKind::Pure;
    out.pure = PureState(cutoff, std::move(amps));
    return out;
  }
  Matrix mat = Matrix::Zero(d, d);
  for (const auto &e : entries) {
    if (e.size() != 5) p.fail("density entry needs '<row> <col> <re> <im>'");
    int r = p.parse_int(e[1]), c = p.parse_int(e[2]);
    if (r < 0 || r >= d || c < 0 || c >= d) {
      p.fail("entry (" + e[1] + "," + e[2] + ") out of range");
    }
    mat(r, c) = Complex(p.parse_double(e[3]), p.parse_double(e[4]));
  }
  out.kind = StateKind::Density;
  out.density = DensityOperator(cutoff, std::move(mat));
  return out;
}

void save_state(const PureState &psi, const std::string &path) {
  std::ostringstream out;
  out << kMagic << "\n"
      << "kind pure\n"
      << "dim_a " << psi.cutoff().dim_a << "\n"
      << "dim_b " << psi.cutoff().dim_b << "\n";
  for (int i = 0; i < psi.cutoff().total_dim(); ++i) {
    Complex a = psi.amps()(i);
    if (a == Complex(0.0, 0.0)) continue;
    out << "entry " << i << " " << format_double(a.real()) << " "
        << format_double(a.imag()) << "\n";
  }
  write_file(path, out.str());
}

void save_state(const DensityOperator &rho, const std::string &path) {
  std::ostringstream out;
  out << kMagic << "\n"
      << "kind density\n"
      << "dim_a " << rho.cutoff().dim_a << "\n"
      << "dim_b " << rho.cutoff().dim_b << "\n";
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) {
      Complex v = rho.mat()(r, c);
      if (v == Complex(0.0, 0.0)) continue;
      out << "entry " << r << " " << c << " " << format_double(v.real()) << " "
          << format_double(v.imag()) << "\n";
    }
  write_file(path, out.str());
}

void save_state(const MinimalReference &m, const std::string &path) {
  std::ostringstream out;
  out << kMagic << "\n"
      << "kind minimal\n"
      << "p00 " << format_double(m.p00) << "\n"
      << "p11 " << format_double(m.p11) << "\n"
      << "p_phi " << format_double(m.p_phi) << "\n"
      << "r0 " << format_double(m.r0) << "\n"
      << "r1 " << format_double(m.r1) << "\n";
  write_file(path, out.str());
}

}  // namespace ssrbell
