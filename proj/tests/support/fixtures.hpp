#pragma once

// Fixed source fixtures: a dozen lexically varied snippets for the
// invariance checks, and the synthetic mutation corpus (base programs,
// rename mutants, statement-reorder mutants, unrelated programs) used by
// the ranking checks.

#include <string>
#include <utility>
#include <vector>

#include "support/gen.hpp"

namespace fixtures {

inline const std::vector<std::string>& invariance_set() {
  static const std::vector<std::string> kSet = {
      R"cs(using System;
class Accumulator
{
    static int Sum(int[] data)
    {
        int total = 0;
        for (int i = 0; i < data.Length; i++)
        {
            total += data[i];
        }
        return total;
    }
}
)cs",
      R"cs(using System;
using System.Text;
class Greeter
{
    static string Greet(string name)
    {
        // the delimiter below must survive: "// not a comment"
        string prefix = "hello // world";
        return prefix + ", " + name + "!";
    }
}
)cs",
      R"cs(class BitOps
{
    static uint Mix(uint seed)
    {
        uint h = seed;
        h ^= h >> 16;
        h *= 2654435761;
        h ^= h << 5;
        return h;
    }
}
)cs",
      R"cs(class Flags
{
    static bool Check(int mask, int bit)
    {
        bool set = (mask & (1 << bit)) != 0;
        bool clear = !set;
        return set || clear && true;
    }
}
)cs",
      R"cs(using System.IO;
class Copier
{
    static void Fill(byte[] dst, byte b)
    {
        for (int k = 0; k < dst.Length; ++k)
            dst[k] = b;
    }
}
)cs",
      R"cs(class Paths
{
    static string Join(string a, string b)
    {
        string sep = @"C:\temp\""quoted""";
        char slash = '\\';
        return a + slash + b + sep;
    }
}
)cs",
      R"cs(class Counters
{
    int hits;
    int misses;
    void Record(bool hit)
    {
        if (hit) { hits++; } else { misses--; }
        /* density: hits vs misses */
        double ratio = (double)hits / (hits + misses);
    }
}
)cs",
      R"cs(class Builder
{
    object Make(int kind)
    {
        if (kind == 0) { return new object(); }
        var list = new int[kind];
        list[0] = kind % 7;
        return list;
    }
}
)cs",
      R"cs(class TypeProbe
{
    static bool Inspect(object o)
    {
        bool text = o is string;
        var t = typeof(int);
        int width = sizeof(char);
        return text && t != null && width > 0;
    }
}
)cs",
      R"cs(class Guard
{
    static int Clamp(int v, int lo, int hi)
    {
        checked
        {
            if (v < lo) return lo;
            if (v > hi) return hi;
        }
        return v;
    }
}
)cs",
      R"cs(using System;
class Swapper
{
    static void Swap(ref int a, ref int b)
    {
        int keep = a;
        a = b;
        b = keep;
    }
}
)cs",
      R"cs(class Stepper
{
    static int Walk(int start, int limit)
    {
        int pos = start;
        while (pos <= limit)
        {
            pos <<= 1;
            pos -= 1;
        }
        return pos >= 0 ? pos : -pos;
    }
}
)cs",
  };
  return kSet;
}

// ---------------------------------------------------------------------------
// mutation corpus
// ---------------------------------------------------------------------------

struct NamedSource {
  std::string id;
  std::string text;
};

inline const std::vector<std::string>& base_programs() {
  static const std::vector<std::string> kBases = {
      // bubble sort: relational + indexing heavy
      R"cs(using System;
class SortJob
{
    static void Bubble(int[] data)
    {
        for (int i = 0; i < data.Length - 1; i++)
        {
            for (int j = 0; j < data.Length - i - 1; j++)
            {
                if (data[j] > data[j + 1])
                {
                    int keep = data[j];
                    data[j] = data[j + 1];
                    data[j + 1] = keep;
                }
            }
        }
    }
}
)cs",
      // running statistics: arithmetic + compound assignment
      R"cs(using System;
class Stats
{
    static double Mean(double[] xs)
    {
        double total = 0;
        double squares = 0;
        int seen = 0;
        for (int i = 0; i < xs.Length; i++)
        {
            total += xs[i];
            squares += xs[i] * xs[i];
            seen++;
        }
        double mean = total / seen;
        double variance = squares / seen - mean * mean;
        return mean + variance * 0;
    }
}
)cs",
      // binary search: relational + halving
      R"cs(class Finder
{
    static int Search(int[] sorted, int needle)
    {
        int lo = 0;
        int hi = sorted.Length - 1;
        while (lo <= hi)
        {
            int mid = lo + (hi - lo) / 2;
            if (sorted[mid] == needle) return mid;
            if (sorted[mid] < needle) { lo = mid + 1; }
            else { hi = mid - 1; }
        }
        return -1;
    }
}
)cs",
      // string assembly: concatenation + literals
      R"cs(using System.Text;
class Report
{
    static string Render(string title, string[] rows)
    {
        string body = "== " + title + " ==";
        for (int r = 0; r < rows.Length; r++)
        {
            body = body + "\n" + rows[r];
            body += ";";
        }
        body += "\n-- end --";
        return body;
    }
}
)cs",
      // object graph builder: new + casts
      R"cs(using System.Collections.Generic;
class GraphBuilder
{
    static List<object> Build(int nodes)
    {
        var bag = new List<object>(nodes);
        for (int n = 0; n < nodes; n++)
        {
            var label = (object)("node" + n);
            bag.Add(label);
            var twin = new object[] { label, n };
            bag.Add(twin);
        }
        return bag;
    }
}
)cs",
  };
  return kBases;
}

// Same programs with independent statements reordered (and nothing else).
inline const std::vector<std::string>& reorder_programs() {
  static const std::vector<std::string> kReorders = {
      // swap assignment order inside the swap block
      R"cs(using System;
class SortJob
{
    static void Bubble(int[] data)
    {
        for (int i = 0; i < data.Length - 1; i++)
        {
            for (int j = 0; j < data.Length - i - 1; j++)
            {
                if (data[j] > data[j + 1])
                {
                    int keep = data[j + 1];
                    data[j + 1] = data[j];
                    data[j] = keep;
                }
            }
        }
    }
}
)cs",
      // accumulators declared and updated in a different order
      R"cs(using System;
class Stats
{
    static double Mean(double[] xs)
    {
        int seen = 0;
        double squares = 0;
        double total = 0;
        for (int i = 0; i < xs.Length; i++)
        {
            seen++;
            squares += xs[i] * xs[i];
            total += xs[i];
        }
        double mean = total / seen;
        double variance = squares / seen - mean * mean;
        return mean + variance * 0;
    }
}
)cs",
      // hi declared before lo; branch order flipped
      R"cs(class Finder
{
    static int Search(int[] sorted, int needle)
    {
        int hi = sorted.Length - 1;
        int lo = 0;
        while (lo <= hi)
        {
            int mid = lo + (hi - lo) / 2;
            if (sorted[mid] == needle) return mid;
            if (sorted[mid] > needle) { hi = mid - 1; }
            else { lo = mid + 1; }
        }
        return -1;
    }
}
)cs",
      // trailer appended before the loop result is sealed
      R"cs(using System.Text;
class Report
{
    static string Render(string title, string[] rows)
    {
        string body = "== " + title + " ==";
        for (int r = 0; r < rows.Length; r++)
        {
            body += ";";
            body = body + "\n" + rows[r];
        }
        body += "\n-- end --";
        return body;
    }
}
)cs",
      // twin built before the label is added
      R"cs(using System.Collections.Generic;
class GraphBuilder
{
    static List<object> Build(int nodes)
    {
        var bag = new List<object>(nodes);
        for (int n = 0; n < nodes; n++)
        {
            var label = (object)("node" + n);
            var twin = new object[] { label, n };
            bag.Add(twin);
            bag.Add(label);
        }
        return bag;
    }
}
)cs",
  };
  return kReorders;
}

inline const std::vector<std::string>& unrelated_programs() {
  static const std::vector<std::string> kUnrelated = {
      // plain data carrier: almost no operators, keyword heavy
      R"cs(using System;
class Person
{
    public string Name;
    public int Age;
    public bool Active;
    public string Country;
    public Person Parent;
    public void Reset()
    {
        Name = null;
        Age = 0;
        Active = false;
        Country = "unknown";
        Parent = null;
    }
}
)cs",
      // exception plumbing: try/catch/finally, throw
      R"cs(using System;
class SafeRunner
{
    static void Invoke(Action job)
    {
        try
        {
            job();
        }
        catch (InvalidOperationException bad)
        {
            throw new ApplicationException("wrapped", bad);
        }
        finally
        {
            Console.WriteLine("done");
        }
    }
}
)cs",
      // switch dispatcher: case labels, returns
      R"cs(class Dispatcher
{
    static string NameOf(int code)
    {
        switch (code)
        {
            case 0: return "zero";
            case 1: return "one";
            case 2: return "two";
            case 3: return "three";
            default: break;
        }
        return "many";
    }
}
)cs",
      // interface + abstract surface: declarations only
      R"cs(using System;
interface IStore
{
    void Put(string key, object value);
    object Get(string key);
    bool Drop(string key);
}
abstract class StoreBase : IStore
{
    public abstract void Put(string key, object value);
    public abstract object Get(string key);
    public abstract bool Drop(string key);
    protected virtual void Flush() { }
}
)cs",
      // bit mask constants: shifts and ors only
      R"cs(class Masks
{
    const int Read = 1 << 0;
    const int Write = 1 << 1;
    const int Exec = 1 << 2;
    const int Owner = Read | Write | Exec;
    const int Group = Read | Exec;
    const int World = Read;
    static int Widen(int bits) { return bits << 8 | bits; }
}
)cs",
  };
  return kUnrelated;
}

// ids: base1..5, ren1..5 (bijective rename of base), ord1..5 (statement
// reorders), unrel1..5.
inline std::vector<NamedSource> mutation_corpus(const codewarp::LanguageProfile& profile) {
  std::vector<NamedSource> out;
  const auto& bases = base_programs();
  const auto& reorders = reorder_programs();
  const auto& unrelated = unrelated_programs();
  for (std::size_t k = 0; k < bases.size(); ++k) {
    out.push_back({"base" + std::to_string(k + 1), bases[k]});
    out.push_back({"ren" + std::to_string(k + 1), gen::rename_identifiers(bases[k], profile)});
    out.push_back({"ord" + std::to_string(k + 1), reorders[k]});
  }
  for (std::size_t k = 0; k < unrelated.size(); ++k) {
    out.push_back({"unrel" + std::to_string(k + 1), unrelated[k]});
  }
  return out;
}

}  // namespace fixtures
