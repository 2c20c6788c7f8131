#include "ricci/rational.hpp"

#include "ricci/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace ricci {

std::string to_fraction_string(const rational& r) {
    std::string out = numerator(r).str();
    out += '/';
    out += denominator(r).str();
    return out;
}

std::string to_decimal_string(const rational& r, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    bigint num = numerator(r);
    bigint den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    if (num == 0) return "0";

    // Long division producing significant_digits+1 digits, then round half-even.
    bigint intpart = num / den;
    std::string int_digits = intpart == 0 ? std::string() : intpart.str();
    int int_len = static_cast<int>(int_digits.size());

    int exponent10 = int_len; // decimal point position relative to first digit
    bigint rem = num % den;
    std::string digits = int_digits;
    if (digits.empty()) {
        // Skip leading zeros of the fractional expansion.
        while (rem != 0) {
            rem *= 10;
            bigint d = rem / den;
            rem %= den;
            if (d != 0) {
                digits.push_back(static_cast<char>('0' + d.convert_to<int>()));
                break;
            }
            --exponent10;
        }
        if (digits.empty()) return "0";
    }
    while (static_cast<int>(digits.size()) < significant_digits + 1 && !(rem == 0 && static_cast<int>(digits.size()) >= significant_digits)) {
        rem *= 10;
        bigint d = rem / den;
        rem %= den;
        digits.push_back(static_cast<char>('0' + d.convert_to<int>()));
    }

    bool exact_tail = (rem == 0);
    if (static_cast<int>(digits.size()) > significant_digits) {
        char extra = digits[significant_digits];
        digits.resize(significant_digits);
        bool round_up;
        if (extra > '5' || (extra == '5' && !exact_tail)) {
            round_up = true;
        } else if (extra < '5') {
            round_up = false;
        } else { // exactly half: round to even
            round_up = ((digits.back() - '0') % 2) == 1;
        }
        if (round_up) {
            int i = static_cast<int>(digits.size()) - 1;
            while (i >= 0) {
                if (digits[i] != '9') {
                    ++digits[i];
                    break;
                }
                digits[i] = '0';
                --i;
            }
            if (i < 0) {
                digits.insert(digits.begin(), '1');
                digits.pop_back();
                ++exponent10;
            }
        }
    }
    while (digits.size() > 1 && digits.back() == '0' && static_cast<int>(digits.size()) > exponent10) digits.pop_back();

    std::string out;
    if (negative) out += '-';
    if (exponent10 <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-exponent10), '0');
        out += digits;
    } else if (exponent10 >= static_cast<int>(digits.size())) {
        out += digits;
        out.append(static_cast<size_t>(exponent10) - digits.size(), '0');
    } else {
        out.append(digits, 0, static_cast<size_t>(exponent10));
        out += '.';
        out.append(digits, static_cast<size_t>(exponent10), std::string::npos);
    }
    return out;
}

rational parse_rational(const std::string& text) {
    if (text.empty()) fail(errc::malformed_input, "empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            bigint num(text.substr(0, slash));
            bigint den(text.substr(slash + 1));
            if (den == 0) fail(errc::malformed_input, "zero denominator: " + text);
            return rational(num, den);
        }
        // Decimal or integer literal, optionally with exponent.
        std::string mantissa = text;
        long exp10 = 0;
        auto epos = text.find_first_of("eE");
        if (epos != std::string::npos) {
            mantissa = text.substr(0, epos);
            exp10 = std::stol(text.substr(epos + 1));
        }
        std::string digits;
        long frac_len = 0;
        bool seen_point = false;
        size_t start = 0;
        bool negative = false;
        if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
            negative = mantissa[0] == '-';
            start = 1;
        }
        for (size_t i = start; i < mantissa.size(); ++i) {
            char c = mantissa[i];
            if (c == '.') {
                if (seen_point) fail(errc::malformed_input, "bad rational literal: " + text);
                seen_point = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                if (seen_point) ++frac_len;
            } else {
                fail(errc::malformed_input, "bad rational literal: " + text);
            }
        }
        if (digits.empty()) fail(errc::malformed_input, "bad rational literal: " + text);
        bigint num(digits);
        if (negative) num = -num;
        long shift = exp10 - frac_len;
        bigint den = 1;
        if (shift >= 0) {
            for (long i = 0; i < shift; ++i) num *= 10;
        } else {
            for (long i = 0; i < -shift; ++i) den *= 10;
        }
        return rational(num, den);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::malformed_input, "bad rational literal: " + text);
    }
}

double to_double(const rational& r) { return r.convert_to<double>(); }

} // namespace ricci
