#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "heckeforge/errors.hpp"

namespace heckeforge {

/// Permutation of {1..l} with its canonical reduced word in the generators
/// s_1..s_{l-1}. The cached word is the lexicographically smallest reduced
/// word, computed greedily from left descents; its length is the inversion
/// count, so it is reduced by construction.
class Permutation {
  public:
    explicit Permutation(int l) : images_(static_cast<std::size_t>(l)) {
        if (l < 1) throw IndexOutOfRange("permutation rank must be >= 1");
        std::iota(images_.begin(), images_.end(), 0);
    }

    /// images are 1-based values: images[i] = w(i+1).
    static Permutation from_images(const std::vector<int>& images_one_based) {
        Permutation p(static_cast<int>(images_one_based.size()));
        std::vector<bool> seen(images_one_based.size(), false);
        for (std::size_t i = 0; i < images_one_based.size(); ++i) {
            int v = images_one_based[i] - 1;
            if (v < 0 || v >= static_cast<int>(images_one_based.size()) || seen[v])
                throw IndexOutOfRange("permutation images are not a bijection");
            seen[v] = true;
            p.images_[i] = v;
        }
        return p;
    }

    /// Product of generators s_{word[0]} s_{word[1]} ... (1-based indices).
    static Permutation from_word(int l, const std::vector<int>& word) {
        Permutation p(l);
        for (int g : word) p = p.times_s(g);
        return p;
    }

    int rank() const { return static_cast<int>(images_.size()); }

    /// w(i) for 1-based i, returning a 1-based value.
    int image(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

    std::vector<int> images_one_based() const {
        std::vector<int> r(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r[i] = images_[i] + 1;
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i)) return false;
        return true;
    }

    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++inv;
        return inv;
    }

    /// Right product w * s_i (1-based generator index): swaps positions i, i+1.
    Permutation times_s(int i) const {
        check_gen(i);
        Permutation p = *this;
        std::swap(p.images_[static_cast<std::size_t>(i - 1)],
                  p.images_[static_cast<std::size_t>(i)]);
        return p;
    }

    /// Left product s_i * w: swaps the values i, i+1.
    Permutation s_times(int i) const {
        check_gen(i);
        Permutation p = *this;
        for (auto& v : p.images_) {
            if (v == i - 1)
                v = i;
            else if (v == i)
                v = i - 1;
        }
        return p;
    }

    /// True iff l(w * s_i) > l(w), i.e. i is a right ascent.
    bool right_ascent(int i) const {
        check_gen(i);
        return images_[static_cast<std::size_t>(i - 1)] < images_[static_cast<std::size_t>(i)];
    }

    Permutation inverse() const {
        Permutation p(rank());
        for (std::size_t i = 0; i < images_.size(); ++i)
            p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        return p;
    }

    friend Permutation operator*(const Permutation& w, const Permutation& v) {
        if (w.rank() != v.rank()) throw RankMismatch("permutation ranks differ");
        Permutation p(w.rank());
        for (std::size_t i = 0; i < p.images_.size(); ++i)
            p.images_[i] = w.images_[static_cast<std::size_t>(v.images_[i])];
        return p;
    }

    /// Lexicographically smallest reduced word (1-based generator indices).
    /// Greedy: the smallest left descent is the smallest admissible first
    /// letter, then recurse on s_i * w.
    std::vector<int> canonical_word() const {
        std::vector<int> word;
        Permutation w = *this;
        std::vector<int> pos(images_.size());  // pos[v] = where value v sits
        while (true) {
            for (std::size_t i = 0; i < w.images_.size(); ++i)
                pos[static_cast<std::size_t>(w.images_[i])] = static_cast<int>(i);
            int descent = 0;
            for (int i = 1; i < w.rank(); ++i) {
                if (pos[static_cast<std::size_t>(i - 1)] > pos[static_cast<std::size_t>(i)]) {
                    descent = i;
                    break;
                }
            }
            if (descent == 0) break;
            word.push_back(descent);
            w = w.s_times(descent);
        }
        return word;
    }

    friend bool operator==(const Permutation& x, const Permutation& y) {
        return x.images_ == y.images_;
    }
    friend std::strong_ordering operator<=>(const Permutation& x, const Permutation& y) {
        return x.images_ <=> y.images_;
    }

  private:
    void check_gen(int i) const {
        if (i < 1 || i >= rank()) throw IndexOutOfRange("generator index out of range");
    }

    std::vector<int> images_;  // 0-based
};

/// All permutations of {1..l} in lexicographic order of their images.
inline std::vector<Permutation> all_permutations(int l) {
    std::vector<int> images(static_cast<std::size_t>(l));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace heckeforge
