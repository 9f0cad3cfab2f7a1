#include "shimura/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace shimura {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in permutation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      int value = 0;
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') value = value * 10 + (text[i++] - '0');
      if (i == start) throw std::invalid_argument("expected point in permutation: " + std::string(text));
      if (value < 1 || value > degree)
        throw std::invalid_argument("point out of range in permutation: " + std::string(text));
      if (used[value - 1]) throw std::invalid_argument("repeated point in permutation: " + std::string(text));
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = images_[rhs.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  int result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace shimura
