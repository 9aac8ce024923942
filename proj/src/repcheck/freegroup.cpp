#include "mcg/freegroup.hpp"

#include <cstdlib>

#include "mcg/word.hpp"

namespace mcg {

FreeWord reduce(FreeWord w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(std::move(w));
}

FreeAutomorphism FreeAutomorphism::identity(int rank, int frames) {
  FreeAutomorphism f;
  for (int i = 1; i <= rank; ++i) {
    f.images.push_back({i});
    f.inverse_images.push_back({i});
  }
  f.framing.assign(frames, 0);
  return f;
}

namespace {
FreeWord substitute(const std::vector<FreeWord>& img, const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    int g = std::abs(x);
    if (g < 1 || g > int(img.size())) throw Error("free generator out of range");
    auto& im = img[g - 1];
    if (x > 0) out.insert(out.end(), im.begin(), im.end());
    else for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
  }
  return reduce(std::move(out));
}
}  // namespace

FreeWord FreeAutomorphism::apply(const FreeWord& w) const { return substitute(images, w); }
FreeWord FreeAutomorphism::apply_inverse(const FreeWord& w) const { return substitute(inverse_images, w); }

FreeAutomorphism FreeAutomorphism::after(const FreeAutomorphism& o) const {
  FreeAutomorphism r;
  for (auto& w : o.images) r.images.push_back(apply(w));
  for (auto& w : inverse_images) r.inverse_images.push_back(o.apply_inverse(w));
  r.framing = framing.empty() ? o.framing : (o.framing.empty() ? framing : framing + o.framing);
  return r;
}

FreeAutomorphism FreeAutomorphism::inverted() const {
  FreeAutomorphism r;
  r.images = inverse_images;
  r.inverse_images = images;
  r.framing = -framing;
  return r;
}

FreeAutomorphism FreeAutomorphism::power(int n) const {
  FreeAutomorphism base = n < 0 ? inverted() : *this;
  FreeAutomorphism r = identity(rank(), int(framing.size()));
  for (int i = 0; i < std::abs(n); ++i) r = r.after(base);
  return r;
}

IntMatrix FreeAutomorphism::abelianized() const {
  int n = rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int x : images[j]) m(std::abs(x) - 1, j) += x > 0 ? 1 : -1;
  return m;
}

std::string free_word_str(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += ' ';
    int g = std::abs(x);
    s += g <= int(names.size()) ? names[g - 1] : "g" + std::to_string(g);
    if (x < 0) s += "^-1";
  }
  return s;
}

}  // namespace mcg
