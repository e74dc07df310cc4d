// Copyright 2026 The btlab Authors.
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

#include "btlab/kraft.hpp"

#include <algorithm>
#include <functional>

#include "btlab/errors.hpp"

namespace btlab {
namespace {

std::string LeastRotation(std::string_view letters) {
  std::string best(letters);
  std::string doubled = std::string(letters) + std::string(letters);
  for (size_t k = 1; k < letters.size(); ++k) {
    std::string_view candidate(doubled.data() + k, letters.size());
    if (candidate < best) best.assign(candidate);
  }
  return best;
}

// Smallest k dividing |w| with w invariant under rotation by k.
size_t PrimitivePeriod(std::string_view w) {
  const size_t n = w.size();
  for (size_t k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i + k < n && periodic; ++i) periodic = w[i] == w[i + k];
    if (periodic) return k;
  }
  return n;
}

}  // namespace

CircularWord::CircularWord(std::string_view letters) {
  if (letters.empty()) throw Error(ErrorKind::kEmptyWord, "circular word needs at least one letter");
  for (char ch : letters) {
    if (ch != 'F' && ch != 'V') {
      throw Error(ErrorKind::kInvalidLetter, "letter '" + std::string(1, ch) + "' is not F or V");
    }
  }
  letters_ = LeastRotation(letters);
}

int CircularWord::CountF() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'F')); }
int CircularWord::CountV() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'V')); }

CircularWord CanonicalRotation(std::string_view letters) { return CircularWord(letters); }

bool IsAperiodic(const CircularWord& word) { return PrimitivePeriod(word.letters()) == word.size(); }

CircularWord DualWord(const CircularWord& word) {
  std::string swapped = word.letters();
  for (char& ch : swapped) ch = ch == 'F' ? 'V' : 'F';
  return CircularWord(swapped);
}

bool WordOrder(const CircularWord& a, const CircularWord& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.letters() < b.letters();
}

int BTClass::CountF() const {
  int total = 0;
  for (const auto& w : words) total += w.CountF();
  return total;
}

int BTClass::CountV() const {
  int total = 0;
  for (const auto& w : words) total += w.CountV();
  return total;
}

std::string BTClass::ToString() const {
  std::string out;
  for (size_t k = 0; k < words.size(); ++k) {
    if (k) out += '+';
    out += words[k].letters();
  }
  return out;
}

bool operator<(const BTClass& a, const BTClass& b) {
  if (a.words.size() != b.words.size()) return a.words.size() > b.words.size();
  return std::lexicographical_compare(a.words.begin(), a.words.end(), b.words.begin(), b.words.end(), WordOrder);
}

BTClass MakeClass(std::vector<CircularWord> words) {
  std::sort(words.begin(), words.end(), WordOrder);
  return BTClass{std::move(words)};
}

BTClass KraftType(const Permutation& perm, const Signature& sig) {
  CheckSignature(perm, sig);
  std::vector<CircularWord> words;
  for (const auto& cycle : CycleDecomposition(perm)) {
    std::string letters;
    for (int i : cycle) letters += i <= sig.d ? 'V' : 'F';
    const size_t period = PrimitivePeriod(letters);
    CircularWord root(std::string_view(letters).substr(0, period));
    for (size_t k = 0; k < letters.size() / period; ++k) words.push_back(root);
  }
  return MakeClass(std::move(words));
}

BTClass DualClass(const BTClass& cls) {
  std::vector<CircularWord> words;
  for (const auto& w : cls.words) words.push_back(DualWord(w));
  return MakeClass(std::move(words));
}

std::vector<CircularWord> AperiodicNecklaces(int f, int v) {
  std::vector<CircularWord> out;
  if (f < 0 || v < 0 || f + v == 0) return out;
  // Walk all arrangements of the multiset {F^f, V^v} in lexicographic order
  // and keep those that are their own least rotation with no proper period.
  std::string letters = std::string(static_cast<size_t>(f), 'F') + std::string(static_cast<size_t>(v), 'V');
  do {
    if (PrimitivePeriod(letters) == letters.size() && LeastRotation(letters) == letters) {
      out.emplace_back(letters);
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<BTClass> EnumerateBT1(const Signature& sig) {
  if (sig.c < 0 || sig.d < 0 || sig.h() < 1) {
    throw Error(ErrorKind::kSignatureMismatch, "enumeration needs c, d >= 0 and c + d >= 1");
  }
  std::vector<CircularWord> alphabet;
  for (int f = 0; f <= sig.c; ++f) {
    for (int v = 0; v <= sig.d; ++v) {
      for (auto& w : AperiodicNecklaces(f, v)) alphabet.push_back(std::move(w));
    }
  }
  std::sort(alphabet.begin(), alphabet.end(), WordOrder);

  // Multisets as nondecreasing index sequences into `alphabet`.
  std::vector<BTClass> classes;
  std::vector<CircularWord> chosen;
  std::function<void(size_t, int, int)> extend = [&](size_t from, int f_left, int v_left) {
    if (f_left == 0 && v_left == 0) {
      classes.push_back(BTClass{chosen});
      return;
    }
    for (size_t k = from; k < alphabet.size(); ++k) {
      const int f = alphabet[k].CountF(), v = alphabet[k].CountV();
      if (f > f_left || v > v_left) continue;
      chosen.push_back(alphabet[k]);
      extend(k, f_left - f, v_left - v);
      chosen.pop_back();
    }
  };
  extend(0, sig.c, sig.d);
  std::sort(classes.begin(), classes.end());
  return classes;
}

long long Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

long long CountBT1(const Signature& sig) {
  const long long count = static_cast<long long>(EnumerateBT1(sig).size());
  const long long expected = Binomial(sig.h(), sig.c);
  if (count != expected) {
    throw Error(ErrorKind::kCountMismatch, "enumerated " + std::to_string(count) + " classes for (c,d)=(" +
                                               std::to_string(sig.c) + "," + std::to_string(sig.d) +
                                               ") but binomial is " + std::to_string(expected));
  }
  return count;
}

}  // namespace btlab
