// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pgrade/errors.hpp"

namespace pgrade {

namespace {

constexpr double kWeightTol = 1e-9;
constexpr double kHermitianTol = 1e-12;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  return trim(s.substr(0, s.find('#')));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
      return false;
    }
  }
  return true;
}

int parse_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("expected an integer, got '" + s + "'", line);
  return v;
}

// "[1 2 5]" or "[1,2,5]" -> the listed integers, in order.
std::vector<int> parse_tuple(const std::string& text, int line) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("expected an orbital list in brackets, got '" + text + "'", line);
  }
  std::string body = text.substr(1, text.size() - 2);
  for (char& c : body) {
    if (c == ',') c = ' ';
  }
  std::vector<int> out;
  for (const auto& w : words(body)) {
    const int i = parse_int(w, line);
    if (i < 1) throw ParseError("orbital indices start at 1", line);
    out.push_back(i);
  }
  return out;
}

// Splits "... [a b] ... [c]" into the text before the first bracket and the bracket groups.
std::pair<std::string, std::vector<std::string>> bracket_groups(const std::string& s, int line) {
  std::vector<std::string> groups;
  std::string rest;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto open = s.find('[', pos);
    if (open == std::string::npos) {
      rest += s.substr(pos);
      break;
    }
    rest += s.substr(pos, open - pos);
    const auto close = s.find(']', open);
    if (close == std::string::npos) throw ParseError("unterminated '['", line);
    groups.push_back(s.substr(open, close - open + 1));
    pos = close + 1;
  }
  return {trim(rest), groups};
}

void check_finite(Complex c, const std::string& text) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("non-finite number '" + text + "'");
  }
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  const auto fail = [&] { return DomainError("malformed complex number '" + text + "'"); };
  if (text.empty()) throw fail();
  const char* begin = text.c_str();
  const char* end = begin + text.size();
  char* cursor = nullptr;
  const double first = std::strtod(begin, &cursor);
  if (cursor == begin) throw fail();
  Complex out;
  if (cursor == end) {
    out = {first, 0.0};
  } else if (*cursor == 'i' && cursor + 1 == end) {
    out = {0.0, first};
  } else {
    if (*cursor != '+' && *cursor != '-') throw fail();
    const char* second_begin = cursor;
    const double second = std::strtod(second_begin, &cursor);
    if (cursor == second_begin || *cursor != 'i' || cursor + 1 != end) throw fail();
    out = {first, second};
  }
  check_finite(out, text);
  return out;
}

std::string format_complex(Complex c) {
  char re[40];
  char im[40];
  std::snprintf(re, sizeof re, "%.17g", c.real());
  if (c.imag() == 0.0) return re;
  std::snprintf(im, sizeof im, "%.17g", std::abs(c.imag()));
  return std::string(re) + (std::signbit(c.imag()) ? "-" : "+") + im + "i";
}

const StateVector& StateFile::state(const std::string& name) const {
  auto it = states.find(name);
  if (it == states.end()) throw DomainError("unknown state '" + name + "'");
  return it->second;
}

MixedState StateFile::mixed(const std::string& name) const {
  if (auto it = mixtures.find(name); it != mixtures.end()) {
    double total = 0.0;
    for (const auto& [w, s] : it->second.members) total += w;
    std::vector<MixedState::Component> parts;
    for (const auto& [w, s] : it->second.members) parts.push_back({w / total, state(s).normalized()});
    return MixedState(std::move(parts));
  }
  if (states.count(name) == 0) throw DomainError("unknown state or mixture '" + name + "'");
  return MixedState::pure(state(name));
}

GroupProduct StateFile::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) throw DomainError("unknown group '" + name + "'");
  std::vector<StateVector> factors;
  for (const auto& s : it->second) factors.push_back(state(s));
  return GroupProduct(std::move(factors));
}

StateFile parse_state_file(std::istream& in) {
  StateFile file;
  enum class Block { none, state, mixture } block = Block::none;
  std::string current;
  int current_line = 0;
  int particles = -1;
  std::vector<std::pair<std::vector<int>, Complex>> pending;
  std::map<std::string, int> seen;  // name -> defining line

  const auto declare = [&](const std::string& name, int line) {
    if (!valid_name(name)) throw ParseError("invalid name '" + name + "'", line);
    if (seen.count(name)) {
      throw ParseError("name '" + name + "' already defined on line " +
                           std::to_string(seen[name]),
                       line);
    }
    seen[name] = line;
  };

  const auto finish_state = [&](int line) {
    if (pending.empty()) throw ParseError("state '" + current + "' has no terms", line);
    StateVector v(file.dim, particles);
    for (const auto& [orbitals, c] : pending) {
      const Occupation occ = Occupation::from_indices(orbitals);
      if (v.terms().count(occ)) {
        throw ParseError("state '" + current + "' lists " + occ.to_string() + " twice", line);
      }
      v.add(occ, c);
    }
    file.states.emplace(current, std::move(v));
    pending.clear();
    particles = -1;
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip_comment(raw);
    if (text.empty()) continue;
    const auto w = words(text);

    if (block == Block::state) {
      if (w.size() == 1 && w[0] == "end") {
        finish_state(line);
        block = Block::none;
        continue;
      }
      auto [coef_text, tuples] = bracket_groups(text, line);
      if (tuples.size() != 1) throw ParseError("expected '<coefficient> [orbitals]'", line);
      Complex c;
      try {
        c = parse_complex(coef_text);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line);
      }
      const auto tail = text.substr(text.find(']') + 1);
      if (!trim(tail).empty()) throw ParseError("unexpected text after ']'", line);
      std::vector<int> orbitals = parse_tuple(tuples[0], line);
      for (std::size_t k = 1; k < orbitals.size(); ++k) {
        if (orbitals[k] <= orbitals[k - 1]) {
          throw ParseError("occupation must be strictly increasing", line);
        }
      }
      for (int i : orbitals) {
        if (i > file.dim) {
          throw ParseError("orbital " + std::to_string(i) + " exceeds basis " +
                               std::to_string(file.dim),
                           line);
        }
      }
      if (particles < 0) particles = static_cast<int>(orbitals.size());
      if (static_cast<int>(orbitals.size()) != particles) {
        throw ParseError("all terms of a state must have the same particle number", line);
      }
      pending.emplace_back(std::move(orbitals), c);
      continue;
    }

    if (block == Block::mixture) {
      if (w.size() == 1 && w[0] == "end") {
        auto& m = file.mixtures[current];
        if (m.members.empty()) throw ParseError("mixture '" + current + "' is empty", line);
        double total = 0.0;
        int n = -1;
        for (const auto& [weight, s] : m.members) {
          total += weight;
          const int k = file.states.at(s).particles();
          if (n >= 0 && k != n) {
            throw ParseError("mixture '" + current + "' mixes particle numbers", line);
          }
          n = k;
        }
        if (std::abs(total - 1.0) > kWeightTol) {
          throw ParseError("mixture '" + current + "' weights sum to " + std::to_string(total), line);
        }
        block = Block::none;
        continue;
      }
      if (w.size() != 2) throw ParseError("expected '<weight> <state>'", line);
      double weight = 0.0;
      try {
        const Complex c = parse_complex(w[0]);
        if (c.imag() != 0.0) throw DomainError("weight must be real");
        weight = c.real();
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line);
      }
      if (!(weight > 0.0)) throw ParseError("mixture weights must be positive", line);
      if (!file.states.count(w[1])) throw ParseError("unknown state '" + w[1] + "'", line);
      file.mixtures[current].members.emplace_back(weight, w[1]);
      continue;
    }

    const std::string& keyword = w[0];
    if (keyword == "basis") {
      if (file.dim != 0) throw ParseError("basis declared twice", line);
      if (w.size() != 2) throw ParseError("expected 'basis <dim>'", line);
      file.dim = parse_int(w[1], line);
      if (file.dim < 1) throw ParseError("basis dimension must be >= 1", line);
      continue;
    }
    if (file.dim == 0) throw ParseError("'basis <dim>' must come first", line);
    if (keyword == "state" || keyword == "mixture") {
      if (w.size() != 2) throw ParseError("expected '" + keyword + " <name>'", line);
      declare(w[1], line);
      current = w[1];
      current_line = line;
      if (keyword == "state") {
        block = Block::state;
      } else {
        block = Block::mixture;
        file.mixtures[current];
      }
      continue;
    }
    if (keyword == "group") {
      if (w.size() < 4 || w[2] != "=") throw ParseError("expected 'group <name> = s1 s2 ...'", line);
      declare(w[1], line);
      std::vector<std::string> members(w.begin() + 3, w.end());
      for (const auto& s : members) {
        if (!file.states.count(s)) throw ParseError("unknown state '" + s + "'", line);
        if (file.states.at(s).particles() < 1) {
          throw ParseError("group factor '" + s + "' has no particles", line);
        }
      }
      file.groups.emplace(w[1], std::move(members));
      continue;
    }
    throw ParseError("unknown keyword '" + keyword + "'", line);
  }
  if (block != Block::none) {
    throw ParseError("block '" + current + "' opened here is missing 'end'", current_line);
  }
  if (file.dim == 0) throw ParseError("missing 'basis <dim>'", line + 1);
  return file;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return parse_state_file(in);
}

std::string write_state_file(const StateFile& file) {
  std::ostringstream out;
  out << "basis " << file.dim << "\n";
  for (const auto& [name, v] : file.states) {
    out << "\nstate " << name << "\n";
    for (const auto& [occ, c] : v.terms()) out << "  " << format_complex(c) << " " << occ.to_string() << "\n";
    out << "end\n";
  }
  for (const auto& [name, m] : file.mixtures) {
    out << "\nmixture " << name << "\n";
    for (const auto& [w, s] : m.members) out << "  " << format_complex(w) << " " << s << "\n";
    out << "end\n";
  }
  if (!file.groups.empty()) out << "\n";
  for (const auto& [name, members] : file.groups) {
    out << "group " << name << " =";
    for (const auto& s : members) out << " " << s;
    out << "\n";
  }
  return out.str();
}

QOperator parse_operator_file(std::istream& in) {
  int rank = 0;
  auto closure = QOperator::Closure::complete;
  QOperator::TermMap terms;
  std::map<QOperator::Key, int> lines;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip_comment(raw);
    if (text.empty()) continue;
    const auto w = words(text);
    if (w[0] == "rank") {
      if (rank != 0) throw ParseError("rank declared twice", line);
      if (w.size() != 2) throw ParseError("expected 'rank <q>'", line);
      rank = parse_int(w[1], line);
      if (rank < 1) throw ParseError("rank must be >= 1", line);
      continue;
    }
    if (w[0] == "hermitian") {
      if (w.size() != 2 || (w[1] != "auto" && w[1] != "strict")) {
        throw ParseError("expected 'hermitian auto' or 'hermitian strict'", line);
      }
      closure = w[1] == "auto" ? QOperator::Closure::complete : QOperator::Closure::validate;
      continue;
    }
    if (rank == 0) throw ParseError("'rank <q>' must precede operator terms", line);
    auto [rest, tuples] = bracket_groups(text, line);
    if (tuples.size() != 2 || text.front() != '[') {
      throw ParseError("expected '[I] [J] <coefficient>'", line);
    }
    QOperator::Key key{parse_tuple(tuples[0], line), parse_tuple(tuples[1], line)};
    for (const auto* t : {&key.first, &key.second}) {
      if (static_cast<int>(t->size()) != rank) {
        throw ParseError("index tuple length differs from rank " + std::to_string(rank), line);
      }
    }
    Complex lambda;
    try {
      lambda = parse_complex(rest);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line);
    }
    if (lines.count(key)) {
      throw ParseError("duplicate (I, J) key, first given on line " + std::to_string(lines[key]),
                       line);
    }
    lines[key] = line;
    terms.emplace(std::move(key), lambda);
  }
  if (rank == 0) throw ParseError("missing 'rank <q>'", line + 1);

  for (const auto& [key, lambda] : terms) {
    const QOperator::Key mirror{key.second, key.first};
    auto it = terms.find(mirror);
    const int at = std::max(lines[key], lines[mirror]);
    if (it == terms.end()) {
      if (closure == QOperator::Closure::validate) {
        throw ParseError("Hermitian partner of this term is missing", lines[key]);
      }
    } else if (std::abs(it->second - std::conj(lambda)) > kHermitianTol) {
      throw ParseError("lambda(I,J) differs from conj(lambda(J,I)) by more than 1e-12", at);
    }
  }
  return QOperator(rank, std::move(terms), closure, kHermitianTol);
}

QOperator read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return parse_operator_file(in);
}

}  // namespace pgrade
