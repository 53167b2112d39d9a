#include "mser/lubm.hpp"

#include <random>
#include <set>
#include <sstream>

namespace mser {

namespace {

const char* kTBox = R"(
  Declaration(Class(ub:Organization))
  SubClassOf(ub:University ub:Organization)
  SubClassOf(ub:Department ub:Organization)
  SubClassOf(ub:ResearchGroup ub:Organization)
  SubClassOf(ub:Institute ub:Organization)
  SubClassOf(ub:College ub:Organization)
  SubClassOf(ub:Program ub:Organization)

  SubClassOf(ub:Employee ub:Person)
  SubClassOf(ub:Faculty ub:Employee)
  SubClassOf(ub:Professor ub:Faculty)
  SubClassOf(ub:FullProfessor ub:Professor)
  SubClassOf(ub:AssociateProfessor ub:Professor)
  SubClassOf(ub:AssistantProfessor ub:Professor)
  SubClassOf(ub:VisitingProfessor ub:Professor)
  SubClassOf(ub:Chair ub:Professor)
  SubClassOf(ub:Dean ub:Professor)
  SubClassOf(ub:Lecturer ub:Faculty)
  SubClassOf(ub:PostDoc ub:Faculty)
  SubClassOf(ub:AdministrativeStaff ub:Employee)
  SubClassOf(ub:ClericalStaff ub:AdministrativeStaff)
  SubClassOf(ub:SystemsStaff ub:AdministrativeStaff)
  SubClassOf(ub:Student ub:Person)
  SubClassOf(ub:UndergraduateStudent ub:Student)
  SubClassOf(ub:GraduateStudent ub:Student)
  SubClassOf(ub:TeachingAssistant ub:Person)
  SubClassOf(ub:ResearchAssistant ub:Person)
  SubClassOf(ub:Director ub:Person)

  SubClassOf(ub:Course ub:Work)
  SubClassOf(ub:GraduateCourse ub:Course)
  SubClassOf(ub:Research ub:Work)
  SubClassOf(ub:Article ub:Publication)
  SubClassOf(ub:JournalArticle ub:Article)
  SubClassOf(ub:ConferencePaper ub:Article)
  SubClassOf(ub:TechnicalReport ub:Article)
  SubClassOf(ub:Book ub:Publication)
  SubClassOf(ub:Manual ub:Publication)
  SubClassOf(ub:Software ub:Publication)
  SubClassOf(ub:Specification ub:Publication)
  SubClassOf(ub:UnofficialPublication ub:Publication)

  SubObjectPropertyOf(ub:headOf ub:worksFor)
  SubObjectPropertyOf(ub:worksFor ub:memberOf)
  InverseObjectProperties(ub:member ub:memberOf)
  SubObjectPropertyOf(ub:doctoralDegreeFrom ub:degreeFrom)
  SubObjectPropertyOf(ub:mastersDegreeFrom ub:degreeFrom)
  SubObjectPropertyOf(ub:undergraduateDegreeFrom ub:degreeFrom)
  InverseObjectProperties(ub:degreeFrom ub:hasAlumnus)

  ObjectPropertyDomain(ub:advisor ub:Person)
  ObjectPropertyRange(ub:advisor ub:Professor)
  ObjectPropertyDomain(ub:teacherOf ub:Faculty)
  ObjectPropertyRange(ub:teacherOf ub:Course)
  ObjectPropertyDomain(ub:takesCourse ub:Student)
  ObjectPropertyRange(ub:takesCourse ub:Course)
  ObjectPropertyDomain(ub:publicationAuthor ub:Publication)
  ObjectPropertyRange(ub:publicationAuthor ub:Person)
  ObjectPropertyDomain(ub:memberOf ub:Person)
  ObjectPropertyRange(ub:memberOf ub:Organization)
  ObjectPropertyDomain(ub:subOrganizationOf ub:Organization)
  ObjectPropertyRange(ub:subOrganizationOf ub:Organization)
  ObjectPropertyDomain(ub:teachingAssistantOf ub:TeachingAssistant)
  ObjectPropertyRange(ub:teachingAssistantOf ub:Course)
  ObjectPropertyDomain(ub:headOf ub:Chair)
  ObjectPropertyDomain(ub:degreeFrom ub:Person)
  ObjectPropertyRange(ub:degreeFrom ub:University)

  SubClassOf(ub:Chair ObjectSomeValuesFrom(ub:headOf ub:Department))
  SubClassOf(ub:Employee ObjectSomeValuesFrom(ub:worksFor ub:Organization))
  SubClassOf(ub:Faculty ObjectSomeValuesFrom(ub:teacherOf ub:Course))
  SubClassOf(ub:GraduateStudent ObjectSomeValuesFrom(ub:takesCourse ub:GraduateCourse))
  SubClassOf(ub:ResearchAssistant ObjectSomeValuesFrom(ub:worksFor ub:ResearchGroup))
  SubClassOf(ub:TeachingAssistant ObjectSomeValuesFrom(ub:teachingAssistantOf ub:Course))

  DisjointClasses(ub:Person ub:Organization ub:Publication)
  DisjointClasses(ub:Person ub:Work)
)";

class Writer {
 public:
  explicit Writer(std::uint64_t seed) : rng_(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  void type(const std::string& cls, const std::string& ind) {
    out_ << "  ClassAssertion(ub:" << cls << " <" << ind << ">)\n";
  }
  void rel(const std::string& prop, const std::string& s, const std::string& o) {
    out_ << "  ObjectPropertyAssertion(ub:" << prop << " <" << s << "> <" << o << ">)\n";
  }
  std::string str() const { return out_.str(); }

 private:
  std::mt19937_64 rng_;
  std::ostringstream out_;
};

std::string university(int u) { return "http://www.University" + std::to_string(u) + ".edu"; }

std::string department(int u, int d) {
  return "http://www.Department" + std::to_string(d) + ".University" + std::to_string(u) + ".edu";
}

std::string prefixes() {
  return std::string("Prefix(ub:=<") + kUbNamespace + ">)\nPrefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
}

std::string query(const std::string& select, const std::string& where) {
  return std::string("PREFIX ub: <") + kUbNamespace + ">\nSELECT " + select + " WHERE {\n" + where + "\n}\n";
}

}  // namespace

LubmBundle generate_lubm(const LubmOptions& opts) {
  LubmBundle b;
  Writer w(opts.seed);
  const int kDegreeSources = 20;
  std::set<int> referenced{0};
  auto some_university = [&] {
    int u = w.between(0, kDegreeSources - 1);
    referenced.insert(u);
    return university(u);
  };

  for (int u = 0; u < opts.universities; ++u) {
    referenced.insert(u);
    for (int d = 0; d < opts.departments; ++d) {
      const std::string dept = department(u, d);
      auto local = [&](const std::string& kind, int i) { return dept + "/" + kind + std::to_string(i); };
      w.type("Department", dept);
      w.rel("subOrganizationOf", dept, university(u));

      int groups = w.between(3, 5);
      for (int g = 0; g < groups; ++g) {
        w.type("ResearchGroup", local("ResearchGroup", g));
        w.rel("subOrganizationOf", local("ResearchGroup", g), dept);
      }

      std::vector<std::string> faculty, professors, courses, grad_courses;
      int course_no = 0, grad_course_no = 0, pub_no = 0;
      auto hire = [&](const std::string& rank, int count, int pubs_lo, int pubs_hi) {
        for (int i = 0; i < count; ++i) {
          std::string f = local(rank, i);
          w.type(rank, f);
          w.rel("worksFor", f, dept);
          w.rel("undergraduateDegreeFrom", f, some_university());
          w.rel("mastersDegreeFrom", f, some_university());
          w.rel("doctoralDegreeFrom", f, some_university());
          int teaches = w.between(1, 2);
          for (int c = 0; c < teaches; ++c) {
            std::string course = local("Course", course_no++);
            w.type("Course", course);
            w.rel("teacherOf", f, course);
            courses.push_back(course);
          }
          if (rank != "Lecturer") {
            int teaches_grad = w.between(1, 2);
            for (int c = 0; c < teaches_grad; ++c) {
              std::string course = local("GraduateCourse", grad_course_no++);
              w.type("GraduateCourse", course);
              w.rel("teacherOf", f, course);
              grad_courses.push_back(course);
            }
            professors.push_back(f);
            b.professors.emplace_back(f, std::string(kUbNamespace) + rank);
          }
          int pubs = w.between(pubs_lo, pubs_hi);
          for (int p = 0; p < pubs; ++p) {
            std::string pub = f + "/Publication" + std::to_string(p);
            w.type(w.chance(0.5) ? "JournalArticle" : "ConferencePaper", pub);
            w.rel("publicationAuthor", pub, f);
            ++pub_no;
          }
          faculty.push_back(f);
        }
      };
      hire("FullProfessor", w.between(7, 10), 3, 5);
      hire("AssociateProfessor", w.between(10, 14), 2, 4);
      hire("AssistantProfessor", w.between(8, 11), 1, 3);
      hire("Lecturer", w.between(5, 7), 0, 2);
      w.rel("headOf", local("FullProfessor", 0), dept);

      auto pick = [&](const std::vector<std::string>& v) { return v[w.between(0, static_cast<int>(v.size()) - 1)]; };
      int undergrads = static_cast<int>(faculty.size()) * w.between(2, 4);
      for (int s = 0; s < undergrads; ++s) {
        std::string st = local("UndergraduateStudent", s);
        w.type("UndergraduateStudent", st);
        w.rel("memberOf", st, dept);
        int takes = w.between(2, 4);
        for (int c = 0; c < takes; ++c) w.rel("takesCourse", st, pick(courses));
        if (w.chance(0.2)) w.rel("advisor", st, pick(professors));
      }
      int grads = static_cast<int>(faculty.size()) * w.between(1, 2);
      for (int s = 0; s < grads; ++s) {
        std::string st = local("GraduateStudent", s);
        w.type("GraduateStudent", st);
        w.rel("memberOf", st, dept);
        w.rel("undergraduateDegreeFrom", st, some_university());
        int takes = w.between(1, 3);
        for (int c = 0; c < takes; ++c) w.rel("takesCourse", st, pick(grad_courses));
        w.rel("advisor", st, pick(professors));
        if (w.chance(0.25)) {
          w.type("TeachingAssistant", st);
          w.rel("teachingAssistantOf", st, pick(courses));
        }
        if (w.chance(0.25)) {
          w.type("ResearchAssistant", st);
          w.rel("worksFor", st, local("ResearchGroup", w.between(0, groups - 1)));
        }
        if (w.chance(0.3)) {
          std::string pub = local("GraduatePublication", pub_no++);
          w.type("Publication", pub);
          w.rel("publicationAuthor", pub, st);
          w.rel("publicationAuthor", pub, pick(professors));
        }
      }
    }
  }
  for (int u : referenced) w.type("University", university(u));

  b.ontology = prefixes() + "Ontology(<http://example.org/lubm-desk>\n" + kTBox + w.str() + ")\n";
  b.extension = prefixes() +
                "Ontology(<http://example.org/lubm-desk/type-of-professor>\n"
                "  ClassAssertion(ub:TypeOfProfessor ub:FullProfessor)\n"
                "  ClassAssertion(ub:TypeOfProfessor ub:AssociateProfessor)\n"
                "  ClassAssertion(ub:TypeOfProfessor ub:AssistantProfessor)\n"
                "  DisjointClasses(ub:FullProfessor ub:AssociateProfessor)\n"
                "  DisjointClasses(ub:FullProfessor ub:AssistantProfessor)\n"
                "  DisjointClasses(ub:AssociateProfessor ub:AssistantProfessor)\n"
                ")\n";

  const std::string d0 = "<" + department(0, 0) + ">";
  const std::string u0 = "<" + university(0) + ">";
  const std::string d0l = department(0, 0) + "/";
  b.standard = {
      {"q1", query("?x", "  ?x a ub:GraduateStudent .\n  ?x ub:takesCourse <" + d0l + "GraduateCourse0> .")},
      {"q2", query("?x ?y ?z",
                   "  ?x a ub:GraduateStudent .\n  ?y a ub:University .\n  ?z a ub:Department .\n"
                   "  ?x ub:memberOf ?z .\n  ?z ub:subOrganizationOf ?y .\n  ?x ub:undergraduateDegreeFrom ?y .")},
      {"q3", query("?x", "  ?x a ub:Publication .\n  ?x ub:publicationAuthor <" + d0l + "AssistantProfessor0> .")},
      {"q4", query("?x", "  ?x a ub:Professor .\n  ?x ub:worksFor " + d0 + " .")},
      {"q5", query("?x", "  ?x a ub:Person .\n  ?x ub:memberOf " + d0 + " .")},
      {"q6", query("?x", "  ?x a ub:Student .")},
      {"q7", query("?x ?y",
                   "  ?x a ub:Student .\n  ?y a ub:Course .\n  <" + d0l + "AssociateProfessor0> ub:teacherOf ?y .\n"
                   "  ?x ub:takesCourse ?y .")},
      {"q8", query("?x ?y", "  ?x a ub:Student .\n  ?y a ub:Department .\n  ?x ub:memberOf ?y .\n"
                            "  ?y ub:subOrganizationOf " + u0 + " .")},
      {"q9", query("?x ?y ?z", "  ?x a ub:Student .\n  ?y a ub:Faculty .\n  ?z a ub:Course .\n"
                               "  ?x ub:advisor ?y .\n  ?y ub:teacherOf ?z .\n  ?x ub:takesCourse ?z .")},
      {"q10", query("?x", "  ?x a ub:Student .\n  ?x ub:takesCourse <" + d0l + "GraduateCourse0> .")},
      {"q11", query("?x", "  ?x a ub:ResearchGroup .\n  ?x ub:subOrganizationOf ?y .\n"
                          "  ?y ub:subOrganizationOf " + u0 + " .")},
      {"q12", query("?x ?y", "  ?x a ub:Chair .\n  ?y a ub:Department .\n  ?x ub:worksFor ?y .\n"
                             "  ?y ub:subOrganizationOf " + u0 + " .")},
      {"q13", query("?x", "  ?x a ub:Person .\n  " + u0 + " ub:hasAlumnus ?x .")},
      {"q14", query("?x", "  ?x a ub:UndergraduateStudent .")},
  };
  b.meta = {
      {"mq1", query("?x ?c", "  ?x a ?c .\n  ?c rdfs:subClassOf ub:Professor .")},
      {"mq4", query("?c ?d", "  ?c rdfs:subClassOf ?d .\n  ?d rdfs:subClassOf ub:Person .")},
      {"mq5", query("?x ?p", "  ?x ?p " + d0 + " .")},
      {"mq10", query("?c", "  ?x a ?c .\n  ?x ub:memberOf " + d0 + " .")},
  };
  b.special = {
      {"sq1", query("?x ?y", "  ?x a ?y .\n  ?y a ub:TypeOfProfessor .")},
      {"sq2", query("?x ?y", "  ?x a ub:TypeOfProfessor .\n  ?y a ub:TypeOfProfessor .\n  ?x owl:disjointWith ?y .")},
  };
  return b;
}

}  // namespace mser
