#include "snlu/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "snlu/errors.hpp"

namespace snlu {
namespace {

// Entity type ids in default_taxonomy() order.
enum EntityType {
  kCity, kState, kCountry, kDegree, kCollege, kCourse, kExam,
  kInstitute, kCompany, kJobRole, kSkill, kStream, kScholarship, kBoard,
};

const char* const kEntityTypeNames[] = {
    "city", "state", "country", "degree", "college", "course", "exam",
    "institute", "company", "job_role", "skill", "stream", "scholarship", "board",
};

const std::vector<std::string> kCities = {
    "Mumbai", "Delhi", "New Delhi", "Bangalore", "Bengaluru", "Hyderabad", "Chennai", "Kolkata", "Pune",
    "Ahmedabad", "Jaipur", "Lucknow", "Kanpur", "Nagpur", "Indore", "Bhopal", "Patna", "Vadodara",
    "Ludhiana", "Agra", "Nashik", "Faridabad", "Meerut", "Rajkot", "Varanasi", "Srinagar", "Aurangabad",
    "Dhanbad", "Amritsar", "Prayagraj", "Allahabad", "Ranchi", "Howrah", "Coimbatore", "Jabalpur", "Gwalior",
    "Vijayawada", "Jodhpur", "Madurai", "Raipur", "Kota", "Guwahati", "Chandigarh", "Solapur", "Hubli",
    "Bareilly", "Moradabad", "Mysore", "Mysuru", "Gurgaon", "Gurugram", "Aligarh", "Jalandhar",
    "Tiruchirappalli", "Bhubaneswar", "Salem", "Warangal", "Thiruvananthapuram", "Saharanpur", "Guntur",
    "Bikaner", "Noida", "Jamshedpur", "Bhilai", "Cuttack", "Kochi", "Nellore", "Bhavnagar",
    "Dehradun", "Durgapur", "Asansol", "Rourkela", "Nanded", "Kolhapur", "Ajmer", "Akola", "Gulbarga",
    "Jamnagar", "Ujjain", "Siliguri", "Jhansi", "Jammu", "Mangalore", "Erode", "Belgaum", "Tirunelveli",
    "Udaipur", "Davanagere", "Kozhikode", "Calicut", "Kurnool", "Rajahmundry", "Bokaro", "Bellary", "Patiala",
    "Agartala", "Bhagalpur", "Latur", "Dhule", "Korba", "Bhilwara", "Muzaffarpur", "Ahmednagar", "Mathura",
    "Kollam", "Bilaspur", "Shimla", "Haridwar", "Manipal", "Vellore", "Pilani", "Roorkee", "Kharagpur",
    "Surat", "Navi Mumbai", "Panaji", "Puducherry", "Trichy", "Hosur", "Sonipat", "Mohali",
    "Ghaziabad", "Greater Noida", "Secunderabad", "Imphal", "Shillong", "Gangtok", "Aizawl", "Kohima",
    "Itanagar", "Port Blair", "Darjeeling", "Ooty", "Mussoorie", "Nainital", "Rishikesh", "Bombay", "Madras",
    "Calcutta", "Surathkal", "Kurukshetra", "Silchar", "Hamirpur", "Jalgaon", "Satara", "Sangli", "Karnal",
    "Panipat", "Rohtak", "Hisar", "Bathinda", "Alwar", "Sikar", "Gorakhpur", "Jhansi", "Rewa", "Sagar",
    "Thrissur", "Kannur", "Palakkad", "Tirupati", "Visakhapatnam", "Vizag", "Kakinada", "Nizamabad",
    "Karimnagar", "Hospet", "Shimoga", "Tumkur", "Udupi", "Hassan", "Bidar", "Thanjavur", "Kumbakonam",
    "Dindigul", "Karur", "Namakkal", "Tiruppur", "Nagercoil", "Sambalpur", "Balasore", "Berhampur",
    "Alappuzha", "Kottayam", "Malappuram", "Pathanamthitta", "Idukki", "Wayanad", "Kasaragod", "Mandya",
    "Chikmagalur", "Chitradurga", "Raichur", "Bagalkot", "Gadag", "Haveri", "Karwar", "Kolar", "Bijapur",
    "Anantapur", "Kadapa", "Chittoor", "Ongole", "Eluru", "Machilipatnam", "Srikakulam", "Vizianagaram",
    "Khammam", "Nalgonda", "Mahbubnagar", "Adilabad", "Siddipet", "Suryapet", "Ramagundam", "Cuddalore",
    "Villupuram", "Vellore Cantonment", "Krishnagiri", "Dharmapuri", "Pollachi", "Ramanathapuram",
    "Sivakasi", "Virudhunagar", "Theni", "Pudukkottai", "Nagapattinam", "Tuticorin", "Kanchipuram",
    "Chengalpattu", "Tiruvannamalai", "Ambur", "Jalna", "Parbhani", "Beed", "Osmanabad", "Wardha",
    "Chandrapur", "Yavatmal", "Amravati", "Gondia", "Bhandara", "Ratnagiri", "Sindhudurg", "Palghar",
    "Vasai", "Kalyan", "Dombivli", "Bhiwandi", "Ulhasnagar", "Panvel", "Lonavala", "Baramati", "Malegaon",
    "Nandurbar", "Dhule City", "Ichalkaranji", "Karad", "Pandharpur", "Anand", "Nadiad", "Bharuch",
    "Navsari", "Valsad", "Vapi", "Gandhinagar", "Mehsana", "Palanpur", "Junagadh", "Porbandar", "Morbi",
    "Gandhidham", "Bhuj", "Surendranagar", "Amreli", "Godhra", "Dahod", "Chittorgarh", "Tonk", "Barmer",
    "Jaisalmer", "Pali", "Nagaur", "Churu", "Jhunjhunu", "Bharatpur", "Dholpur", "Sawai Madhopur",
    "Banswara", "Dungarpur", "Hanumangarh", "Sri Ganganagar", "Ratlam", "Mandsaur", "Neemuch", "Dewas",
    "Khandwa", "Khargone", "Burhanpur", "Chhindwara", "Seoni", "Balaghat", "Katni", "Satna", "Sidhi",
    "Shahdol", "Vidisha", "Hoshangabad", "Itarsi", "Betul", "Guna", "Shivpuri", "Morena", "Bhind",
    "Datia", "Chhatarpur", "Tikamgarh", "Damoh", "Etawah", "Mainpuri", "Firozabad", "Etah", "Hathras",
    "Bulandshahr", "Hapur", "Muzaffarnagar", "Shamli", "Bijnor", "Rampur", "Sambhal", "Budaun",
    "Shahjahanpur", "Lakhimpur", "Sitapur", "Hardoi", "Unnao", "Rae Bareli", "Sultanpur", "Faizabad",
    "Ayodhya", "Barabanki", "Gonda", "Bahraich", "Basti", "Deoria", "Kushinagar", "Azamgarh", "Mau",
    "Ballia", "Ghazipur", "Jaunpur", "Mirzapur", "Sonbhadra", "Banda", "Hamirpur UP", "Lalitpur",
    "Orai", "Fatehpur", "Kaushambi", "Pratapgarh", "Gaya", "Nalanda", "Begusarai", "Darbhanga",
    "Purnia", "Katihar", "Saharsa", "Madhubani", "Sitamarhi", "Motihari", "Bettiah", "Chapra", "Siwan",
    "Hajipur", "Arrah", "Buxar", "Sasaram", "Aurangabad Bihar", "Jehanabad", "Nawada", "Munger",
    "Jamui", "Deoghar", "Dumka", "Giridih", "Hazaribagh", "Ramgarh", "Palamu", "Chaibasa", "Bardhaman",
    "Burdwan", "Haldia", "Kharagpur Town", "Midnapore", "Bankura", "Purulia", "Krishnanagar", "Barasat",
    "Malda", "Jalpaiguri", "Cooch Behar", "Baharampur", "Tezpur", "Dibrugarh", "Jorhat", "Sivasagar",
    "Nagaon", "Tinsukia", "Bongaigaon", "Karimganj", "Dharmanagar", "Tura", "Dimapur", "Churachandpur",
    "Mandi", "Solan", "Dharamshala", "Kullu", "Manali", "Una", "Chamba", "Haldwani", "Rudrapur",
    "Kashipur", "Almora", "Pithoragarh", "Kathua", "Udhampur", "Anantnag", "Baramulla", "Leh", "Pathankot",
    "Hoshiarpur", "Kapurthala", "Moga", "Firozpur", "Sangrur", "Barnala", "Fazilka", "Ambala",
    "Yamunanagar", "Kaithal", "Jind", "Bhiwani", "Rewari", "Palwal", "Sirsa", "Fatehabad", "Puri",
    "Angul", "Dhenkanal", "Jharsuguda", "Bargarh", "Bolangir", "Koraput", "Jeypore", "Baripada",
    "Bhadrak", "Jajpur", "Kendrapara", "Paradip", "Durg", "Rajnandgaon", "Jagdalpur", "Ambikapur",
    "Raigarh", "Dhamtari", "Mahasamund", "Margao", "Vasco da Gama", "Mapusa", "Karaikal", "Silvassa",
    "Daman", "Diu", "Kavaratti",
};

const std::vector<std::string> kStates = {
    "Maharashtra", "Karnataka", "Tamil Nadu", "Kerala", "Andhra Pradesh", "Telangana", "Gujarat",
    "Rajasthan", "Uttar Pradesh", "Madhya Pradesh", "Bihar", "West Bengal", "Odisha", "Punjab", "Haryana",
    "Himachal Pradesh", "Uttarakhand", "Jharkhand", "Chhattisgarh", "Assam", "Sikkim", "Tripura",
    "Manipur", "Meghalaya", "Nagaland", "Mizoram", "Arunachal Pradesh", "Jammu and Kashmir", "Delhi NCR",
};

const std::vector<std::string> kCountries = {
    "USA", "United States", "UK", "United Kingdom", "Canada", "Australia", "Germany", "France", "Ireland",
    "New Zealand", "Singapore", "Japan", "Netherlands", "Sweden", "Switzerland", "Italy", "Spain", "UAE",
    "Russia", "China", "South Korea", "Malaysia", "Poland", "Finland", "Norway", "Denmark", "Austria",
    "Belgium", "Philippines", "Ukraine", "Kazakhstan", "Georgia", "Hungary", "Czech Republic", "Taiwan",
};

const std::vector<std::string> kDegrees = {
    "B. Tech", "M. Tech", "MBA", "BBA", "BCA", "MCA", "B.Com", "M.Com", "B.Sc", "M.Sc", "MBBS", "BDS",
    "B.Pharm", "M.Pharm", "LLB", "LLM", "B.Arch", "B.Ed", "M.Ed", "PhD", "BHM", "BAMS", "BHMS", "B.Des",
    "M.Des", "PGDM", "BFA", "MFA", "BJMC", "Diploma", "Polytechnic Diploma", "Integrated MBA", "B.Voc",
    "BPT", "B.Sc Nursing", "GNM", "D.Pharm", "BSW", "MSW", "MPH", "MDS", "BTTM", "B.Lib", "M.Phil",
    "BA LLB", "BBA LLB", "B.Sc Agriculture", "MA English", "BA Economics", "M.Stat",
    "B.Tech Lateral Entry", "M.Tech Research", "Executive MBA",
    "B.Sc Honours", "BA Honours", "B.Com Honours", "D.El.Ed", "B.P.Ed", "M.P.Ed", "BVSc", "MVSc", "BUMS",
    "BNYS", "MD", "MS Surgery", "MCh", "DNB", "PG Diploma", "ITI",
    "MCA Lateral", "M.Arch", "M.Plan", "B.Plan", "BSc IT", "MSc IT", "BSc CS", "MSc Data Science",
};

const std::vector<std::string> kCollegeNames = {
    "Birla", "Amity", "Symbiosis", "Loyola", "Presidency", "Fergusson", "Hindu", "Miranda House",
    "Hansraj", "Kirori Mal", "Lady Shri Ram", "Ramjas", "St Stephens", "Jadavpur", "Osmania",
    "Andhra", "Banaras Hindu", "Aligarh Muslim", "Jamia Millia Islamia", "Savitribai Phule", "Sardar Patel",
    "Babasaheb Ambedkar", "Guru Nanak Dev", "Guru Gobind Singh", "Maulana Azad", "Rajiv Gandhi",
    "Indira Gandhi", "Jawaharlal Nehru", "Lovely Professional", "Sharda", "Galgotias", "Bennett", "Ashoka",
    "Shiv Nadar", "Nirma", "Thapar", "BMS", "Ramaiah", "Dayananda Sagar", "Sathyabama", "Saveetha",
    "Kalinga", "KIIT", "VIT", "SRM", "BITS", "NMIMS", "XLRI", "Welingkar", "Sinhgad", "Bharati Vidyapeeth",
    "DY Patil", "MIT", "COEP", "VJTI", "Somaiya", "Narsee Monjee", "Mithibai", "Jai Hind", "Wilson", "Ruia",
    "Podar", "Sophia", "Nirmala", "Mount Carmel", "Jyoti Nivas", "St Josephs", "St Xaviers", "Madras Christian",
    "Stella Maris", "Ethiraj", "Hislop", "Ravenshaw", "Cotton", "Gauhati", "Utkal", "Sambalpur", "Berhampur",
    "Kakatiya", "Mahatma Gandhi", "Chitkara", "Graphic Era", "Jaypee", "Bharath", "Karunya",
    "Kongu", "PSG", "Sastra", "Vels", "Hindustan", "Sona", "Rathinam", "Acharya", "Reva", "Jain",
    "Alliance", "Garden City", "Presidency University", "Manav Rachna", "Apeejay", "Sushant", "Ansal",
    "NIIT", "Parul", "Marwadi", "Ganpat", "Charusat", "Pandit Deendayal", "Nirma Law", "Jagran Lakecity",
    "Oriental", "Medicaps", "Prestige", "Acropolis", "Vellore Tech", "Kalasalingam", "Mepco", "Thiagarajar",
    "Agarwal", "Bajaj", "Goenka", "Jindal", "Modi", "Poddar", "Ruparel", "Khalsa", "Dayanand",
    "Arya", "Sanatan Dharma", "Vivekananda", "Ramakrishna Mission", "Aurobindo", "Tagore", "Bose",
    "Raman", "Bhabha", "Sarabhai", "Kalam", "Tilak", "Gokhale", "Phule", "Shahu", "Shivaji", "Ranade",
    "Lokmanya", "Sardar Vallabhbhai", "Netaji", "Bhagat Singh", "Chandrashekhar Azad", "Lal Bahadur",
    "Madan Mohan Malaviya", "Deshbandhu", "Maharaja Sayajirao", "Maharani", "Rani Durgavati",
    "Devi Ahilya", "Barkatullah", "Rabindranath", "Vidyasagar", "Bankura Christian", "Scottish Church",
    "Asutosh", "Bethune", "Lady Brabourne", "Patna Science", "Magadh", "Veer Kunwar Singh",
    "Lalit Narayan Mithila", "Tilka Manjhi", "Kolhan", "Vinoba Bhave", "Sido Kanhu", "Ravenshaw Junior",
    "Fakir Mohan", "Khallikote", "Dibrugarh", "Tezpur", "Assam Don Bosco", "Don Bosco", "Pachhunga",
    "Shri Mata Vaishno Devi", "Lovely Institute", "Chaudhary Charan Singh", "Kurukshetra", "Maharshi Dayanand",
    "Deenbandhu Chhotu Ram", "Punjabi", "Baba Farid", "Himachal", "Kumaun", "Hemwati Nandan Bahuguna",
    "Govind Ballabh Pant", "Bundelkhand", "Purvanchal", "Deen Dayal Upadhyaya", "Ram Manohar Lohia",
    "Harcourt Butler", "Kamla Nehru", "Motilal Nehru", "Swami Keshvanand", "Jai Narain Vyas",
    "Mohanlal Sukhadia", "Kota Open", "Vardhaman Mahaveer", "Saurashtra", "Veer Narmad", "Hemchandracharya",
    "Sant Gadge Baba", "Rashtrasant Tukadoji", "Swami Ramanand Teerth", "Shivaji Rao", "Dnyaneshwar",
    "Visvesvaraya", "Siddaganga", "Nitte", "Sahyadri", "Srinivas", "Kuvempu", "Tumkur", "Davangere",
    "Rani Channamma", "Karnatak", "Adikavi Nannaya", "Sri Venkateswara", "Sri Krishnadevaraya",
    "Yogi Vemana", "Acharya Nagarjuna", "Satavahana", "Palamuru", "Periyar", "Bharathiar", "Bharathidasan",
    "Alagappa", "Manonmaniam Sundaranar", "Madurai Kamaraj", "Annamalai", "Avinashilingam", "Calicut",
    "Kannur", "Cochin University", "Kerala", "Mahatma Gandhi Kottayam", "Sree Sankaracharya",
};

const std::vector<std::string> kCollegeForms = {
    "{} University", "{} Institute of Technology", "{} Institute of Management", "{} Engineering College",
    "{} Arts and Science College", "{} Medical College", "{} Law College", "{} Degree College",
};

const std::vector<std::string> kPremierCampuses = {
    "IIT Bombay", "IIT Delhi", "IIT Madras", "IIT Kanpur", "IIT Kharagpur", "IIT Roorkee", "IIT Guwahati",
    "IIT Hyderabad", "IIT Indore", "IIT BHU", "IIT Patna", "IIT Ropar", "IIT Mandi", "IIT Jodhpur",
    "NIT Trichy", "NIT Warangal", "NIT Surathkal", "NIT Calicut", "NIT Rourkela", "NIT Kurukshetra",
    "NIT Silchar", "NIT Hamirpur", "NIT Jaipur", "NIT Nagpur", "NIT Durgapur", "NIT Patna", "NIT Raipur",
    "IIM Ahmedabad", "IIM Bangalore", "IIM Calcutta", "IIM Lucknow", "IIM Indore", "IIM Kozhikode",
    "IIM Shillong", "IIM Udaipur", "IIM Rohtak", "IIM Raipur", "AIIMS Delhi", "AIIMS Jodhpur",
    "AIIMS Bhubaneswar", "AIIMS Rishikesh", "AIIMS Patna", "IIIT Hyderabad", "IIIT Allahabad",
    "IIIT Bangalore", "IIIT Delhi", "Delhi University", "Mumbai University", "Pune University",
    "Calcutta University", "Anna University", "Delhi Technological University", "Netaji Subhas University",
};

const std::vector<std::string> kCityCollegeForms = {
    "{} Institute of Technology", "{} Government Engineering College", "{} Government Medical College",
    "{} Engineering College",
};

const std::vector<std::string> kCourses = {
    "Data Science", "Machine Learning", "Artificial Intelligence", "Digital Marketing",
    "Full Stack Development", "Web Development", "Cyber Security", "Cloud Computing", "Ethical Hacking",
    "Animation", "Fashion Designing", "Interior Designing", "Hotel Management", "Mass Communication",
    "Journalism", "Aviation", "Merchant Navy", "Chartered Accountancy",
    "Company Secretary", "Actuarial Science", "Biotechnology", "Microbiology", "Nursing", "Pharmacy",
    "Physiotherapy", "Psychology", "Economics", "Information Technology",
    "Electronics Engineering", "Mechanical Engineering", "Civil Engineering", "Aeronautical Engineering",
    "Chemical Engineering", "Agriculture", "Forensic Science", "Fine Arts", "Photography", "Film Making",
    "Music Production", "Foreign Trade", "Logistics Management",
    "Investment Banking", "Financial Planning", "Business Analytics", "Human Resource Management",
    "Supply Chain Management", "Game Design", "Robotics", "Nanotechnology", "Environmental Science",
    "Geology", "Astronomy", "Sociology", "Political Science", "Public Administration", "Library Science",
    "Nutrition and Dietetics", "Optometry", "Radiology", "Medical Lab Technology", "Yoga Science",
    "Sports Management", "Travel and Tourism", "Culinary Arts", "Textile Design", "Jewellery Design",
    "Product Design", "Urban Planning", "Petroleum Engineering", "Mining Engineering",
    "Food Technology", "Dairy Technology", "Fisheries Science", "Veterinary Science", "Horticulture",
    "Bachelor of Vocation", "Hospital Administration", "Public Health", "Clinical Research", "Pharmacology",
    "Genetics", "Bioinformatics", "Zoology", "Botany", "Chemistry", "Physics", "Mathematics",
    "Applied Geography", "History", "Archaeology", "Museology", "Anthropology", "Philosophy", "Linguistics",
    "English Literature", "Hindi Literature", "Sanskrit", "Urdu", "Tamil Literature", "French Studies",
    "Social Work", "Rural Development", "Development Studies", "International Relations",
    "Defence Studies", "Criminology", "Cyber Law", "Corporate Law", "Intellectual Property Law",
    "Hotel Operations", "Front Office Management", "Bakery and Confectionery",
    "Beauty Culture", "Cosmetology", "Hair Styling", "Makeup Artistry", "Fitness Training", "Physical Education",
    "Agribusiness Management", "Forestry", "Sericulture", "Apparel Production", "Leather Technology",
    "Printing Technology", "Plastic Technology", "Ceramic Engineering", "Metallurgical Engineering",
    "Instrumentation Engineering", "Electrical Engineering", "Automobile Engineering", "Biomedical Engineering",
    "Industrial Engineering", "Production Engineering", "Environmental Engineering",
    "Agricultural Engineering", "Naval Architecture", "Textile Engineering", "Polymer Science",
    "Econometrics", "Data Engineering", "Software Testing", "Network Administration",
    "Mobile App Development", "UI UX Design", "Visual Communication", "Graphic Design", "VFX", "Sound Engineering",
    "Creative Writing", "Advertising", "Public Relations", "Radio Jockeying",
    "Anchoring", "Air Ticketing", "Cabin Crew Training", "Medical Coding",
    "Medical Transcription", "Dialysis Technology", "Operation Theatre Technology", "Cardiac Care Technology",
    "Anaesthesia Technology", "Audiology", "Speech Therapy", "Occupational Therapy", "Ayurveda", "Homeopathy",
    "Unani Medicine", "Siddha Medicine", "Naturopathy", "Dental Hygiene", "Veterinary Nursing",
};

const std::vector<std::string> kExams = {
    "JEE Main", "JEE Advanced", "NEET", "CAT", "GATE", "GMAT", "GRE", "TOEFL", "IELTS", "SAT", "CLAT",
    "AILET", "XAT", "CMAT", "SNAP", "NMAT", "BITSAT", "VITEEE", "SRMJEE", "COMEDK", "MHT CET", "KCET",
    "WBJEE", "UPSC CSE", "SSC CGL", "SSC CHSL", "IBPS PO", "IBPS Clerk", "SBI PO", "RRB NTPC", "NDA", "CDS",
    "AFCAT", "UGC NET", "CSIR NET", "CTET", "CUET", "NIFT Entrance", "NID DAT", "UCEED", "NEET PG",
    "FMGE", "CA Foundation", "CS Executive", "CMA Inter", "KVPY", "NTSE", "JIPMAT", "IPMAT", "AP EAMCET",
    "TS EAMCET", "KEAM", "OJEE", "GPAT", "NCHM JEE", "NATA", "TANCET", "PGCET", "MAH CET", "HPCET",
    "SSC GD", "SSC MTS", "SSC JE", "SSC CPO", "SSC Stenographer", "RRB Group D", "RRB ALP", "RRB JE",
    "IBPS RRB", "IBPS SO", "SBI Clerk", "RBI Grade B", "RBI Assistant", "NABARD Grade A", "LIC AAO",
    "LIC ADO", "UPSC ESE", "UPSC CMS", "UPSC CAPF", "UPSC EPFO", "UPPSC", "BPSC", "MPSC", "RPSC RAS",
    "TNPSC Group 4", "KPSC", "APPSC", "TSPSC", "WBCS", "OPSC", "HPSC", "Punjab PCS", "UKPSC", "CGPSC",
    "MPPSC", "JPSC", "Agniveer", "Indian Navy SSR", "Territorial Army", "TET", "REET", "HTET", "MAHA TET",
    "KVS PRT", "DSSSB", "NVS TGT", "AIAPGET", "INI CET", "NEET MDS", "NEET SS", "FMGE Screening",
    "AIIMS Nursing", "JIPMER", "PGIMER", "ICAR AIEEA", "CUET PG", "IIT JAM", "JEST", "TIFR GS", "NEST",
    "IISER Aptitude Test", "CMI Entrance", "MAT", "ATMA", "IIFT", "TISSNET",
    "IBSAT", "MICAT", "LSAT India", "MH CET Law", "AP LAWCET", "TS ICET", "AP ICET", "KMAT", "OJEE MBA",
    "PTE", "Duolingo English Test", "OET", "CAEL", "ACT", "MCAT", "USMLE", "PLAB", "AMC", "NCLEX",
};

const std::vector<std::string> kInstituteBrands = {
    "Aakash", "Allen", "Resonance", "FIITJEE", "Vidyamandir", "Narayana", "Sri Chaitanya", "Motion",
    "Bansal", "Vibrant", "Career Point", "Made Easy", "ACE Engineering", "IMS", "Career Launcher",
    "Triumphant", "Vajiram", "Chanakya", "Drishti", "Vision IAS", "Plancess", "PACE", "Rau", "Shankar",
    "Sriram", "Byjus Tuition", "Unacademy Centre", "Physics Wallah", "Rankers", "Brilliant",
    "Excel", "Akash Deep", "Gurukul", "Vedanta", "Shiksha", "Gyan Sagar", "Prerna", "Utkarsh", "Adda",
    "Mahendra", "Paramount", "Kiran", "Lakshya", "Disha", "Momentum", "Catalyser", "Sanjeevani",
    "Elite", "Genius", "Navodaya", "Eklavya", "Abhyas", "Pratibha", "Samarth", "Saraswati", "Vidya",
    "Sankalp", "Sarthi", "Unnati", "Vikas", "Shikhar", "Udaan", "Manzil", "Nishchay", "Parakram",
    "Aarambh", "Pragya", "Medhavi", "Dhruv", "Arjun", "Ekagra", "Sadhana", "Tapasya", "Jigyasa", "Prayas",
    "Sopan", "Vijeta", "Vijay", "Jeet", "Safalta", "Kautilya", "Aryabhatta", "Ramanujan", "Newton",
    "Einstein", "Pythagoras", "Euclid", "Archimedes", "Pinnacle", "Summit", "Zenith", "Apex", "Vertex",
    "Quantum", "Photon", "Nucleus", "Helix", "Synapse", "Neuron", "Catalyst", "Ignite",
    "Mentors", "Achievers", "Champions", "Scholars", "Wizards", "Gurus", "Acharya", "Shishya",
};

const std::vector<std::string> kInstituteForms = {
    "{} Classes", "{} Academy", "{} Tutorials", "{} Career Institute", "{}",
};

const std::vector<std::string> kCompanies = {
    "TCS", "Infosys", "Wipro", "HCL", "Tech Mahindra", "Accenture", "Cognizant", "Capgemini", "IBM",
    "Deloitte", "KPMG", "EY", "PwC", "Google", "Microsoft", "Amazon", "Flipkart", "Paytm", "Zomato",
    "Swiggy", "Ola", "Uber", "Oracle", "SAP", "Adobe", "Intel", "Qualcomm", "Nvidia", "Samsung",
    "Reliance", "Tata Motors", "Mahindra", "Larsen and Toubro", "HDFC Bank", "ICICI Bank", "Axis Bank",
    "State Bank of India", "Kotak Mahindra Bank", "Bajaj Finserv", "Byjus", "Unacademy", "Vedantu",
    "Mindtree", "Mphasis", "Hexaware", "Zoho", "Razorpay", "PhonePe", "Meesho", "Nykaa",
    "Myntra", "BigBasket", "Dunzo", "Cred", "Goldman Sachs", "JP Morgan", "Morgan Stanley", "Barclays",
    "HSBC", "Citibank", "American Express", "Siemens", "Bosch", "Honeywell", "Cisco", "Dell", "HP",
    "Lenovo", "Maruti Suzuki", "Hyundai", "Asian Paints", "ITC", "Hindustan Unilever", "Nestle",
    "Procter and Gamble", "Airtel", "Jio", "Vodafone Idea", "Indigo", "Air India", "ONGC", "NTPC", "BHEL",
    "ISRO", "DRDO", "GAIL", "Indian Oil", "Coal India", "Sun Pharma", "Cipla", "Dr Reddys", "Lupin",
    "Biocon", "Apollo Hospitals", "Fortis", "Max Healthcare", "Zerodha", "Groww", "Policybazaar",
    "MakeMyTrip", "OYO", "Delhivery", "Ather Energy", "Ola Electric", "Mu Sigma", "Fractal Analytics",
    "LTIMindtree", "Persistent Systems", "Cyient", "Zensar", "Sasken", "Juspay", "Postman", "BrowserStack",
    "Tata Steel", "JSW Steel", "Hindalco", "Vedanta", "Adani Ports", "Adani Green", "Godrej", "Havells",
    "Voltas", "Blue Star", "Titan", "Tanishq", "Pidilite", "Dabur", "Marico", "Britannia", "Amul",
    "Parle", "Haldiram", "Patanjali", "Emami", "Bata", "Raymond", "Arvind", "Page Industries", "DMart",
    "Reliance Retail", "Tata Consumer", "Trent", "Shoppers Stop", "Lenskart", "Urban Company", "Cars24",
    "Spinny", "Rapido", "Porter", "Shiprocket", "Ninjacart", "Licious", "Zepto", "Blinkit", "Dream11",
    "MPL", "InMobi", "Glance", "ShareChat", "Dailyhunt", "Pine Labs", "BharatPe", "MobiKwik", "Slice",
    "Upstox", "Angel One", "ICICI Prudential", "HDFC Life", "SBI Life", "LIC", "Bajaj Allianz",
    "Star Health", "Yes Bank", "IndusInd Bank", "Federal Bank", "Canara Bank", "Bank of Baroda",
    "Punjab National Bank", "Union Bank", "IDFC First Bank", "RBL Bank", "Bandhan Bank", "NABARD",
    "SEBI", "RBI", "Indian Railways", "BSNL", "HAL", "BEL", "SAIL", "Power Grid", "NHPC", "IRCTC",
    "Infosys BPM", "Genpact", "WNS", "Concentrix", "Teleperformance", "Startek", "Sutherland",
    "Amdocs", "Synopsys", "Cadence", "Texas Instruments", "Micron", "AMD", "Arm", "Broadcom", "VMware",
    "ServiceNow", "Atlassian", "Walmart Labs", "Target", "Tesco", "Lowes", "Mastercard",
    "PayPal", "Intuit", "Thoughtworks", "Publicis Sapient", "EPAM", "GlobalLogic", "Virtusa", "Coforge",
    "Birlasoft", "KPIT", "Tata Elxsi", "L&T Technology Services", "Quess", "TeamLease", "Naukri",
};

const std::vector<std::string> kJobRoles = {
    "Software Engineer", "Data Analyst", "Data Scientist", "Web Developer", "Android Developer",
    "iOS Developer", "Business Analyst", "Product Manager", "Project Manager", "HR Executive",
    "HR Manager", "Sales Executive", "Marketing Manager", "Digital Marketer", "Content Writer",
    "Graphic Designer", "UI Designer", "UX Designer", "Accountant", "Chartered Accountant", "Bank Clerk",
    "Bank PO", "Teacher", "Lecturer", "Staff Nurse", "Doctor", "Pharmacist",
    "Civil Engineer", "Mechanical Engineer", "Electrical Engineer", "Network Engineer", "DevOps Engineer",
    "Cloud Architect", "System Administrator", "QA Tester", "Test Engineer", "Customer Support Executive",
    "BPO Executive", "Financial Analyst", "Investment Banker", "Lawyer", "Legal Advisor", "Journalist",
    "Video Editor", "Animator", "Fashion Designer", "Interior Designer", "Architect", "Hotel Manager",
    "Chef", "Pilot", "Cabin Crew", "Air Hostess", "Police Constable", "IAS Officer", "IPS Officer",
    "Army Officer", "Data Entry Operator", "Receptionist", "Supply Chain Analyst",
    "Research Scientist", "Lab Technician", "Machine Learning Engineer",
    "Frontend Developer", "Backend Developer", "Full Stack Developer", "Game Developer", "SEO Analyst",
    "Social Media Manager", "Relationship Manager", "Insurance Advisor", "Tax Consultant", "Auditor",
    "Store Manager", "Delivery Executive", "Field Sales Officer", "Security Analyst",
    "Site Engineer", "Quality Engineer", "Production Supervisor", "Maintenance Engineer", "Safety Officer",
    "Store Keeper", "Purchase Executive", "Logistics Coordinator", "Warehouse Supervisor", "Fleet Manager",
    "Loan Officer", "Credit Analyst", "Risk Analyst", "Compliance Officer", "Equity Analyst",
    "Portfolio Manager", "Wealth Manager", "Underwriter", "Claims Executive", "Medical Representative",
    "Clinical Research Associate", "Radiographer", "Physiotherapist", "Dietitian", "Optometrist", "Counsellor",
    "Psychologist", "Social Worker", "Librarian", "School Principal", "Primary Teacher", "Tuition Teacher",
    "Yoga Instructor", "Fitness Trainer", "Sports Coach", "Event Planner", "Travel Agent", "Tour Guide",
    "Front Office Executive", "Housekeeping Supervisor", "Bartender", "Bakery Chef", "Food Technologist",
    "Agriculture Officer", "Forest Officer", "Bank Manager", "Probationary Officer", "Railway Clerk",
    "Station Master", "Loco Pilot", "Customs Officer", "Income Tax Inspector",
    "Sub Inspector", "Patwari", "Gram Sevak", "Court Clerk", "Stenographer", "Translator", "Interpreter",
    "Copywriter", "Editor", "News Anchor", "Radio Jockey", "Photographer", "Cinematographer", "Sound Engineer",
    "Makeup Artist", "Beautician", "Tailor", "Electrician", "Plumber", "Welder", "Fitter", "Draughtsman",
    "Surveyor", "Urban Planner", "Geologist", "Chemist", "Microbiologist", "Biotechnologist",
    "Data Engineer", "Cloud Engineer", "Site Reliability Engineer", "Embedded Engineer", "VLSI Engineer",
    "Robotics Engineer", "Blockchain Developer", "Salesforce Developer", "SAP Consultant", "ERP Consultant",
    "Scrum Master", "Product Designer", "Growth Manager", "Brand Manager", "Key Account Manager",
    "Area Sales Manager", "Territory Manager", "Talent Acquisition Specialist", "Payroll Executive",
};

const std::vector<std::string> kSkills = {
    "Python", "Java", "C Plus Plus", "JavaScript", "SQL", "Excel", "Power BI", "Tableau",
    "Communication Skills", "Public Speaking", "Spoken English", "React", "Angular", "Node JS", "Django",
    "Flutter", "Kotlin", "Swift", "AWS", "Azure", "Docker", "Kubernetes", "Linux", "Photoshop",
    "Illustrator", "AutoCAD", "SolidWorks", "Tally", "SAP FICO", "SEO", "Typing", "Negotiation",
    "Leadership", "Critical Thinking", "Data Visualization", "Statistics",
    "R Programming", "MATLAB", "HTML", "CSS", "Git", "Figma", "Video Editing", "MS Office",
    "English Grammar", "French Language", "German Language", "Japanese Language", "Spring Boot",
    "TypeScript", "MongoDB", "PostgreSQL", "Selenium", "Jenkins", "Terraform", "Pandas", "TensorFlow",
    "PyTorch", "Blender", "Premiere Pro", "Canva", "Google Analytics", "Salesforce",
    "Cold Calling", "Problem Solving", "Presentation Skills",
    "Data Structures", "Algorithms", "System Design", "Competitive Programming", "Rust", "Golang", "PHP",
    "Laravel", "WordPress", "Shopify", "Ruby on Rails", "Vue JS", "Next JS", "Redux", "GraphQL",
    "Microservices", "Hadoop", "Spark", "Kafka", "Snowflake", "Airflow", "Scikit Learn", "Keras",
    "Computer Vision", "Natural Language Processing", "Deep Learning", "Prompt Engineering",
    "Blockchain", "Solidity", "Unity", "Unreal Engine", "CorelDRAW", "InDesign", "Revit", "STAAD Pro",
    "CATIA", "ANSYS", "PLC Programming", "Embedded C", "Arduino", "Raspberry Pi", "VLSI Design",
    "Verilog", "Stock Trading", "Accounting", "GST Filing", "Income Tax Filing", "Business Writing",
    "Copywriting", "Content Writing", "Email Marketing", "Affiliate Marketing", "Facebook Ads",
    "Google Ads", "Sales Skills", "Customer Handling", "Hindi Typing", "Shorthand",
    "Group Discussion", "Personality Development", "Emotional Intelligence", "Spoken Hindi",
};

const std::vector<std::string> kStreams = {
    "Science", "Commerce", "Arts", "Humanities", "PCM", "PCB", "PCMB", "Medical Stream",
    "Non Medical", "Vocational Stream",
};

const std::vector<std::string> kScholarships = {
    "INSPIRE Scholarship", "NMMS Scholarship", "Post Matric Scholarship", "Pre Matric Scholarship",
    "Central Sector Scholarship", "Pragati Scholarship", "Saksham Scholarship", "Ishan Uday Scholarship",
    "Maulana Azad Fellowship", "Reliance Foundation Scholarship", "HDFC Badhte Kadam Scholarship",
    "Aditya Birla Scholarship", "Kotak Kanya Scholarship", "Sitaram Jindal Scholarship",
    "Fulbright Scholarship", "Commonwealth Scholarship", "Erasmus Mundus",
    "DAAD Scholarship", "Inlaks Scholarship", "SBI Asha Scholarship", "LIC Golden Jubilee Scholarship",
    "ONGC Scholarship", "Begum Hazrat Mahal Scholarship", "Vidyasaarathi Scholarship",
    "Buddy4Study Scholarship", "Swami Vivekananda Scholarship", "Prime Ministers Scholarship",
    "Nirankari Scholarship", "Colgate Keep India Smiling Scholarship", "Bharti Airtel Scholarship",
    "Tata Capital Pankh Scholarship",
    "National Means cum Merit Scholarship", "Kishore Vaigyanik Protsahan Yojana", "PM YASASVI Scholarship",
    "Dr Ambedkar Post Matric Scholarship", "Merit cum Means Scholarship",
    "National Overseas Scholarship", "Rajiv Gandhi National Fellowship", "Swami Dayanand Scholarship",
    "Tata Trusts Scholarship", "Infosys Foundation Scholarship", "Wipro Santoor Scholarship",
    "L Oreal India Scholarship", "Keep India Smiling Scholarship", "Foundation for Excellence Scholarship",
    "Narotam Sekhsaria Scholarship", "KC Mahindra Scholarship", "JN Tata Endowment", "Rhodes Scholarship",
    "Australia Awards", "Vanier Scholarship", "Eiffel Excellence Scholarship",
    "MEXT Scholarship", "Swiss Government Excellence Scholarship", "Holland Scholarship",
    "Stipendium Hungaricum", "Global Korea Scholarship", "Chinese Government Scholarship",
    "Mahadbt Scholarship", "Kanyashree Scholarship", "Vidyasiri Scholarship", "E Grantz Scholarship",
    "Jnanabhumi Scholarship", "Nabanna Scholarship", "Medhavi Chhatra Yojana", "Mukhyamantri Kanya Utthan Yojana",
};

const std::vector<std::string> kBoards = {
    "CBSE", "ICSE", "ISC", "State Board", "IB", "IGCSE", "NIOS", "Maharashtra Board", "UP Board",
    "Bihar Board", "Karnataka PUC", "Rajasthan Board", "Gujarat Board", "West Bengal Board",
};

std::string fill(const std::string& form, const std::string& value) {
  std::string out = form;
  out.replace(out.find("{}"), 2, value);
  return out;
}

std::vector<std::string> build_colleges() {
  std::set<std::string> seen;
  std::vector<std::string> out;
  auto push = [&](const std::string& s) {
    if (seen.insert(s).second) out.push_back(s);
  };
  for (const auto& c : kPremierCampuses) push(c);
  Rng rng(0xc011e6e5);
  for (const auto& name : kCollegeNames) {
    if (name.size() <= 4) {
      // short names read like ordinary words inside longer forms
      push(name);
      continue;
    }
    // three distinct forms per name
    const std::size_t a = rng.below(kCollegeForms.size());
    for (std::size_t k = 0; k < 3; ++k) push(fill(kCollegeForms[(a + 3 * k) % kCollegeForms.size()], name));
  }
  for (std::size_t i = 0; i < kCities.size(); i += 3) {
    push(fill(kCityCollegeForms[rng.below(kCityCollegeForms.size())], kCities[i]));
  }
  return out;
}

std::vector<std::string> build_institutes() {
  std::set<std::string> seen;
  std::vector<std::string> out;
  Rng rng(0x1257174e);
  for (const auto& brand : kInstituteBrands) {
    if (brand.size() <= 4) {
      if (seen.insert(brand).second) out.push_back(brand);
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      const std::string s = fill(kInstituteForms[rng.below(kInstituteForms.size())], brand);
      if (seen.insert(s).second) out.push_back(s);
    }
  }
  return out;
}

// Templates shared by every "tell me about X" subcategory; X decides intent.
const std::vector<std::string> kInfoFrames = {
    "tell me about {}", "what do you know about {}", "i want to know about {}", "details of {} please",
    "give me some info about {}", "{} details", "can you tell me about {}?", "i need to know more about {}",
};

std::vector<std::string> with_info_frames(const std::string& slot, std::vector<std::string> specific) {
  for (const auto& f : kInfoFrames) specific.push_back(fill(f, "{" + slot + "}"));
  return specific;
}

std::vector<std::vector<std::string>> build_templates() {
  std::vector<std::vector<std::string>> t(19);
  t[0] = {  // college_search
      "which institutes near {city} have good faculty for {degree}",
      "cheapest colleges for {course} around {city}",
      "autonomous colleges in {state} for girls",
      "nearest college from {city} offering {degree} evening classes",
      "show me some colleges near {city} for {degree}.",
      "which are the best colleges in {city}?",
      "best colleges in {city} for {degree}",
      "top {degree} colleges in {state}",
      "list of colleges offering {course} in {city}",
      "good colleges for {degree} in {city} with low fees",
      "i want a college in {city} for {course}",
      "colleges accepting {exam} score in {state}",
      "suggest some {degree} college in {city}",
      "government colleges in {city} for {degree}",
      "private colleges for {course} near {city}",
      "which college is good for {degree} in {state}?",
  };
  t[1] = with_info_frames("college", {  // college_info
      "what is the campus size of {college}",
      "does {college} provide transport facility",
      "is {college} accredited by naac",
      "what clubs and fests happen at {college}",
      "what is the fee structure of {college}",
      "is {college} good for {degree}?",
      "ranking of {college}",
      "how is the placement record of {college}",
      "accommodation facility at {college}",
      "is {college} a good place for {course}",
  });
  t[2] = {  // college_admission
      "is there any quota seat in {college}",
      "direct admission in {college} without {exam}",
      "how many seats are there in {college} for {course}",
      "lateral entry admission procedure in {college}",
      "admission procedure for {college}",
      "how to get admission in {college} for {degree}",
      "what is the cutoff for {college}",
      "{college} admission process for {course}",
      "documents required for admission in {college}",
      "can i get admission in {college} with {exam} score",
      "when does admission start in {college}?",
      "what rank is needed in {exam} for {college}",
  };
  t[3] = {  // coaching_search
      "crash course for {exam} near {city}",
      "suggest coaching with accommodation for {exam} in {city}",
      "evening batch for {exam} coaching around {city}",
      "good faculty for {exam} preparation in {city}",
      "coaching institutes in {city} for {exam}",
      "best coaching for {exam} in {city}",
      "which coaching is good for {exam} preparation in {city}?",
      "{exam} coaching near {city}",
      "i need tuition for {exam} in {city}",
      "online coaching for {exam}",
      "top institutes for {exam} coaching in {state}",
      "affordable {exam} coaching in {city}",
      "weekend batches for {exam} in {city}",
  };
  t[4] = with_info_frames("institute", {  // coaching_info
      "does {institute} give study material for {exam}",
      "refund policy of {institute}",
      "how many students selected from {institute} last year",
      "does {institute} conduct mock tests",
      "fees of {institute} for {exam}",
      "is {institute} good for {exam}?",
      "what is the result of {institute} in {exam}",
      "{institute} branches in {city}",
      "how are the teachers at {institute}",
      "batch timings of {institute}",
  });
  t[5] = with_info_frames("exam", {  // exam_info
      "what are the best books for {exam}",
      "negative marking in {exam}?",
      "is {exam} an online test or pen paper",
      "how many attempts are allowed in {exam}",
      "syllabus of {exam}",
      "what is the exam pattern of {exam}?",
      "how many papers are there in {exam}",
      "is {exam} difficult",
      "how to prepare for {exam}",
      "marking scheme of {exam}",
  });
  t[6] = {  // exam_dates
      "when will {exam} answer key be released",
      "{exam} counselling schedule",
      "form filling dates of {exam}",
      "when is the {exam} correction window open",
      "when is {exam} conducted",
      "last date to apply for {exam}",
      "{exam} exam date",
      "when will {exam} results come out",
      "what is the last date for {exam} registration",
      "{exam} admit card release date",
      "is {exam} postponed?",
      "when does {exam} registration start",
  };
  t[7] = {  // exam_eligibility
      "qualification needed for {exam}",
      "can final year students sit in {exam}",
      "is there any relaxation in {exam} for reserved category",
      "percentage criteria for {exam} in {board}",
      "eligibility for {exam}",
      "can a {degree} student apply for {exam}?",
      "what is the age limit for {exam}",
      "am i eligible for {exam} after {degree}",
      "minimum marks required for {exam} eligibility",
      "can {board} students give {exam}",
      "who can apply for {exam}",
      "is {degree} enough to write {exam}",
  };
  t[8] = with_info_frames("course", {  // course_info
      "is {course} offered in distance mode",
      "what is the admission criteria for {course}",
      "which colleges teach {course} in {city}",
      "are there practicals in {course}",
      "what is the duration of {course}?",
      "fees for {course} course",
      "what will i study in {course}",
      "is {course} available after {degree}?",
      "which subjects are there in {course}",
      "eligibility to join {course}",
  });
  t[9] = {  // course_scope
      "will {course} be in demand after five years",
      "what packages do {course} freshers get",
      "is {course} worth it in {country}",
      "higher studies options after {course}",
      "what is the scope of {course}",
      "future of {course} in {country}?",
      "is {course} a good career option",
      "jobs after {course}",
      "which is better {course} or {course}?",
      "what can i do after completing {course}",
      "demand for {course} graduates in {city}",
      "does {course} have good growth",
  };
  t[10] = {  // job_search
      "walk in interview for {job_role} in {city}",
      "contract jobs for {job_role} near {city}",
      "government vacancy for {degree} holders in {state}",
      "internship opportunities for {job_role} in {city}",
      "jobs for {job_role} in {city}",
      "{job_role} vacancies in {city}",
      "i am looking for a {job_role} job",
      "fresher jobs in {city} for {degree} graduates",
      "openings for {job_role} with {skill} skills",
      "part time jobs in {city}",
      "work from home jobs for {job_role}",
      "find me a job in {city}",
      "any {job_role} openings in {state}?",
  };
  t[11] = with_info_frames("company", {  // job_company
      "how is the appraisal cycle in {company}",
      "what is the bond period at {company}",
      "does {company} have a branch in {city}",
      "employee benefits at {company}",
      "is {company} hiring {job_role}?",
      "how to get a job at {company}",
      "interview process of {company}",
      "{company} recruitment for freshers",
      "does {company} hire {degree} graduates",
      "working culture at {company}",
  });
  t[12] = {  // job_salary
      "in hand salary of {job_role} per month",
      "hike percentage for {job_role} in {company}",
      "ctc for {degree} freshers at {company}",
      "monthly stipend of {job_role} trainee",
      "salary of {job_role} in {city}",
      "how much does a {job_role} earn",
      "what is the salary at {company} for {job_role}",
      "average package of {job_role}",
      "starting salary after {degree}",
      "{job_role} salary in {country}",
      "how much will i earn as a {job_role}?",
      "pay scale of {job_role} in {company}",
  };
  t[13] = with_info_frames("skill", {  // skill_learning
      "youtube channels to learn {skill}",
      "certification course in {skill} near {city}",
      "roadmap for learning {skill} from scratch",
      "can i master {skill} in three months",
      "how to learn {skill}?",
      "best way to learn {skill} online",
      "where can i learn {skill} in {city}",
      "free tutorials for {skill}",
      "how long does it take to learn {skill}",
      "i want to improve my {skill}",
  });
  t[14] = {  // skill_requirements
      "which certifications help a {job_role}",
      "is {skill} mandatory for {job_role} interviews",
      "what skills are expected from {job_role} freshers",
      "what does {company} expect from a {job_role}",
      "what skills are needed for {job_role}",
      "skills required to become a {job_role}",
      "do i need {skill} for {job_role}?",
      "what should i learn to become {job_role}",
      "is {skill} required for a {job_role} job",
      "which skills does {company} look for",
      "skills needed for {job_role} at {company}",
  };
  t[15] = with_info_frames("scholarship", {  // scholarship_info
      "documents needed for {scholarship}",
      "renewal process of {scholarship}",
      "income limit for {scholarship}",
      "status check for {scholarship} payment",
      "how to apply for {scholarship}?",
      "scholarships for {degree} students in {state}",
      "am i eligible for {scholarship}",
      "last date for {scholarship} application",
      "scholarships for {course} students",
      "what is the amount of {scholarship}",
      "scholarships available for {board} toppers",
  });
  t[16] = {  // abroad_study
      "part time work rules for students in {country}",
      "education loan for studying in {country}",
      "post study work visa in {country}",
      "minimum {exam} band for {country} universities",
      "how to study in {country}",
      "best universities in {country} for {course}",
      "can i do {degree} in {country} after {degree}",
      "cost of studying {course} in {country}",
      "is {exam} required to study in {country}?",
      "student visa process for {country}",
      "which country is best for {course}",
      "masters in {country} after {degree}",
  };
  t[17] = {  // stream_selection
      "confused between {stream} and {stream} after 10th",
      "which stream has more scope {stream} or {stream}",
      "can i switch from {stream} to {stream} in 11th",
      "my parents want {stream} but i like {stream}",
      "which stream should i choose after 10th",
      "is {stream} better than {stream}?",
      "what to take after {board} 10th",
      "i scored 90 percent in {board}, which stream is good",
      "should i take {stream} or {stream}",
      "subjects in {stream} stream",
      "career in {stream} after 10th",
  };
  t[18] = {  // career_options
      "career switch options after {degree} with gap year",
      "highest paying careers for {stream} graduates",
      "should i go for higher studies or job after {degree}",
      "career guidance for {degree} students in {city}",
      "career options after {degree}",
      "what can i do after {degree} in {stream}",
      "best career for {stream} students",
      "which career is good after {course}",
      "what should i do after {degree}?",
      "government jobs after {degree}",
      "career options in {country} after {degree}",
      "i am confused about my career after {degree}",
  };
  return t;
}

const std::vector<std::string> kFillerPrefixes = {
    "hi", "hello", "please", "sir", "sir please", "kindly", "hello sir", "dear sir", "excuse me", "hey",
    "plz", "pls", "i have a doubt", "one question", "quick question", "namaste", "hi there", "respected sir", "hello team", "help me", "actually",
};

const std::vector<std::string> kFillerSuffixes = {
    "please", "thanks", "thank you", "plz", "asap", "sir", "urgent", "please help", "please reply",
    "kindly reply", "pls guide", "guide me", "thanks in advance", "waiting for reply",
    "need help", "tell fast", "reply soon",
};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

}  // namespace

void NoiseRates::validate() const {
  for (double r : {typo, article_drop, word_swap, filler}) {
    if (!(r >= 0.0 && r < 1.0)) throw ConfigError("noise rates must lie in [0, 1)");
  }
}

void GenSpec::validate() const {
  noise.validate();
  if (!(entity_typo_rate >= 0.0 && entity_typo_rate < 1.0)) throw ConfigError("entity typo rate must lie in [0, 1)");
  if (train_size == 0 || validation_size == 0 || test_size == 0) throw ConfigError("split sizes must be positive");
}

Taxonomy default_taxonomy() {
  Taxonomy t;
  t.add_category("find_colleges", {"college_search", "college_info", "college_admission"});
  t.add_category("coaching_institutes", {"coaching_search", "coaching_info"});
  t.add_category("exams", {"exam_info", "exam_dates", "exam_eligibility"});
  t.add_category("courses", {"course_info", "course_scope"});
  t.add_category("jobs", {"job_search", "job_company", "job_salary"});
  t.add_category("skills", {"skill_learning", "skill_requirements"});
  t.add_category("scholarships", {"scholarship_info"});
  t.add_category("study_abroad", {"abroad_study"});
  t.add_category("career_guidance", {"stream_selection", "career_options"});
  for (const char* name : kEntityTypeNames) t.add_entity_type(name);
  return t;
}

EntityGroups default_groups(const Taxonomy& taxonomy) {
  auto cats = [&](std::initializer_list<const char*> names) {
    std::vector<int> out;
    for (const char* n : names) out.push_back(taxonomy.find_category(n));
    return out;
  };
  EntityGroups g;
  g.groups.push_back({"academics", cats({"find_colleges", "courses", "study_abroad"}),
                      {kCity, kState, kCountry, kDegree, kCollege, kCourse, kExam}});
  g.groups.push_back({"preparation", cats({"coaching_institutes", "exams", "scholarships"}),
                      {kCity, kState, kDegree, kCourse, kExam, kInstitute, kScholarship, kBoard}});
  g.groups.push_back({"careers", cats({"jobs", "skills", "career_guidance"}),
                      {kCity, kState, kCountry, kDegree, kCourse, kCompany, kJobRole, kSkill, kStream, kBoard}});
  g.validate(taxonomy);
  return g;
}

std::vector<Rule> default_rules(const Taxonomy& taxonomy) {
  struct Spec {
    const char* category;
    const char* subcategory;
    Rule::Kind kind;
    const char* pattern;
    int priority;
  };
  const Spec specs[] = {
      {"find_colleges", "college_admission", Rule::Kind::Phrase, "admission process", 5},
      {"find_colleges", "college_admission", Rule::Kind::Keyword, "cutoff", 5},
      {"exams", "exam_dates", Rule::Kind::Phrase, "last date", 5},
      {"exams", "exam_eligibility", Rule::Kind::Keyword, "eligibility", 5},
      {"exams", "exam_eligibility", Rule::Kind::Phrase, "age limit", 4},
      {"exams", "exam_info", Rule::Kind::Keyword, "syllabus", 3},
      {"jobs", "job_salary", Rule::Kind::Keyword, "salary", 5},
      {"skills", "skill_requirements", Rule::Kind::Phrase, "skills required", 4},
      {"courses", "course_scope", Rule::Kind::Keyword, "scope", 4},
      {"career_guidance", "stream_selection", Rule::Kind::Keyword, "stream", 4},
  };
  std::vector<Rule> rules;
  for (const auto& s : specs) {
    rules.push_back({taxonomy.find_category(s.category), taxonomy.find_subcategory(s.subcategory), s.kind,
                     tokenize_phrase(s.pattern), s.priority});
  }
  validate_rules(rules, taxonomy);
  return rules;
}

const std::vector<std::vector<std::string>>& default_lexicons() {
  static const std::vector<std::vector<std::string>> lex = [] {
    std::vector<std::vector<std::string>> l(std::size(kEntityTypeNames));
    l[kCity] = kCities;
    l[kState] = kStates;
    l[kCountry] = kCountries;
    l[kDegree] = kDegrees;
    l[kCollege] = build_colleges();
    l[kCourse] = kCourses;
    l[kExam] = kExams;
    l[kInstitute] = build_institutes();
    l[kCompany] = kCompanies;
    l[kJobRole] = kJobRoles;
    l[kSkill] = kSkills;
    l[kStream] = kStreams;
    l[kScholarship] = kScholarships;
    l[kBoard] = kBoards;
    for (auto& values : l) {
      // drop repeats (a few cities are listed twice)
      std::vector<std::string> unique;
      std::set<std::string> seen;
      for (auto& v : values) {
        if (seen.insert(v).second) unique.push_back(v);
      }
      values = std::move(unique);
    }
    return l;
  }();
  return lex;
}

const std::vector<std::vector<std::string>>& default_templates() {
  static const auto templates = build_templates();
  return templates;
}

std::string apply_typo(const std::string& word, Rng& rng) {
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (is_letter(word[i])) letters.push_back(i);
  }
  if (letters.size() < 2) return word;
  std::vector<std::size_t> swaps;  // i such that word[i], word[i+1] are distinct letters
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (is_letter(word[i]) && is_letter(word[i + 1]) && lower(word[i]) != lower(word[i + 1])) swaps.push_back(i);
  }
  std::string out = word;
  if (!swaps.empty() && rng.bernoulli(0.5)) {
    const std::size_t i = rng.pick(swaps);
    std::swap(out[i], out[i + 1]);
  } else {
    out.erase(rng.pick(letters), 1);
  }
  return out;
}

std::vector<NoisyToken> inject_noise(std::vector<NoisyToken> tokens, const NoiseRates& rates, Rng& rng) {
  rates.validate();
  if (rates.filler > 0.0) {
    auto words = [](const std::string& s) {
      std::vector<NoisyToken> out;
      for (auto& w : tokenize_phrase(s)) out.push_back({w, false, false, -1});
      return out;
    };
    if (rng.bernoulli(rates.filler)) {
      auto pre = words(rng.pick(kFillerPrefixes));
      tokens.insert(tokens.begin(), pre.begin(), pre.end());
    }
    if (rng.bernoulli(rates.filler)) {
      auto post = words(rng.pick(kFillerSuffixes));
      tokens.insert(tokens.end(), post.begin(), post.end());
    }
  }
  std::vector<NoisyToken> kept;
  kept.reserve(tokens.size());
  for (auto& t : tokens) {
    if (!t.is_entity && (t.text == "a" || t.text == "an" || t.text == "the") && rng.bernoulli(rates.article_drop)) {
      continue;
    }
    kept.push_back(std::move(t));
  }
  for (auto& t : kept) {
    if (!t.is_entity && t.text.size() >= 2 && rng.bernoulli(rates.typo)) t.text = apply_typo(t.text, rng);
  }
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    auto& a = kept[i];
    auto& b = kept[i + 1];
    if (a.is_entity || b.is_entity || a.glue_left || b.glue_left) continue;
    if (!is_letter(a.text.front()) || !is_letter(b.text.front())) continue;
    if (rng.bernoulli(rates.word_swap)) {
      std::swap(a.text, b.text);
      ++i;
    }
  }
  return kept;
}

LabeledExample render_example(const std::vector<NoisyToken>& tokens, int category, int subcategory, std::size_t id) {
  std::string text;
  std::size_t chars = 0;
  std::vector<EntitySpan> entities;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (i > 0 && !t.glue_left) {
      text += ' ';
      ++chars;
    }
    const std::size_t len = decode_utf8(t.text).size();
    if (t.is_entity) entities.push_back({{chars, chars + len}, t.entity_type});
    text += t.text;
    chars += len;
  }
  LabeledExample ex{.id = id, .raw = RawQuery(text), .category = category, .subcategory = subcategory};
  ex.entities = std::move(entities);
  return ex;
}

namespace {

std::vector<NoisyToken> instantiate(const std::string& tmpl, const Taxonomy& taxonomy, const GenSpec& spec,
                                    Rng& rng) {
  const auto& lex = default_lexicons();
  std::vector<NoisyToken> out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    if (tmpl[pos] == ' ') {
      ++pos;
      continue;
    }
    const bool glued = pos > 0 && tmpl[pos - 1] != ' ';
    if (tmpl[pos] == '{') {
      const std::size_t close = tmpl.find('}', pos);
      const std::string slot = tmpl.substr(pos + 1, close - pos - 1);
      const int type = taxonomy.find_entity_type(slot);
      if (type < 0) throw ConfigError("template slot has unknown type: " + slot);
      std::string value = rng.pick(lex[type]);
      if (spec.entity_typo_rate > 0.0 && rng.bernoulli(spec.entity_typo_rate)) {
        // one typo inside one word of the surface form
        std::vector<std::string> words;
        std::size_t s = 0;
        while (s <= value.size()) {
          const std::size_t e = std::min(value.find(' ', s), value.size());
          words.push_back(value.substr(s, e - s));
          s = e + 1;
        }
        std::vector<std::size_t> candidates;
        for (std::size_t w = 0; w < words.size(); ++w) {
          if (std::count_if(words[w].begin(), words[w].end(), is_letter) >= 3) candidates.push_back(w);
        }
        if (!candidates.empty()) {
          auto& w = words[rng.pick(candidates)];
          w = apply_typo(w, rng);
          value = join(words);
        }
      }
      out.push_back({value, true, glued, type});
      pos = close + 1;
    } else {
      std::size_t end = pos;
      while (end < tmpl.size() && tmpl[end] != ' ' && tmpl[end] != '{') ++end;
      std::string word = tmpl.substr(pos, end - pos);
      // trailing punctuation glues to the previous token
      std::string punct;
      while (!word.empty() && std::ispunct(static_cast<unsigned char>(word.back()))) {
        punct.insert(punct.begin(), word.back());
        word.pop_back();
      }
      if (!word.empty()) out.push_back({word, false, glued, -1});
      if (!punct.empty()) out.push_back({punct, false, true, -1});
      pos = end;
    }
  }
  return out;
}

}  // namespace

GeneratedCorpus generate(const GenSpec& spec) {
  spec.validate();
  GeneratedCorpus corpus{.dataset = {}, .gazetteer = Gazetteer(), .groups = {}, .rules = {}};
  const Taxonomy taxonomy = default_taxonomy();
  const auto& templates = default_templates();
  const std::size_t n_sub = taxonomy.subcategory_count();

  const std::size_t total = spec.total();
  std::vector<int> labels;
  labels.reserve(total);
  for (std::size_t i = 0; i < total; ++i) labels.push_back(static_cast<int>(i % n_sub));
  Rng order_rng(derive_seed(spec.seed, 11));
  order_rng.shuffle(labels);

  // per-subcategory streams keep each class independent of the others
  std::vector<Rng> streams;
  for (std::size_t s = 0; s < n_sub; ++s) streams.emplace_back(derive_seed(spec.seed, 100 + s));

  corpus.dataset.taxonomy = taxonomy;
  corpus.dataset.examples.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    const int sub = labels[i];
    Rng& rng = streams[sub];
    const std::string& tmpl = rng.pick(templates[sub]);
    auto tokens = inject_noise(instantiate(tmpl, taxonomy, spec, rng), spec.noise, rng);
    corpus.dataset.examples.push_back(render_example(tokens, taxonomy.parent(sub), sub, i));
  }
  corpus.dataset.vocab = build_vocab(corpus.dataset.examples);

  corpus.gazetteer = Gazetteer(taxonomy.entity_types());
  const auto& lex = default_lexicons();
  for (std::size_t t = 0; t < lex.size(); ++t) {
    for (const auto& v : lex[t]) corpus.gazetteer.add(v, static_cast<int>(t));
  }
  corpus.groups = default_groups(taxonomy);
  corpus.rules = default_rules(taxonomy);
  return corpus;
}

void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& tax = corpus.dataset.taxonomy;
  {
    std::ofstream out(dir / "dataset.jsonl", std::ios::binary);
    for (const auto& ex : corpus.dataset.examples) out << example_to_json(ex, tax).dump() << '\n';
  }
  {
    std::ofstream out(dir / "gazetteer.tsv", std::ios::binary);
    out << "# phrase\tentity_type\n";
    const auto& lex = default_lexicons();
    for (std::size_t t = 0; t < lex.size(); ++t) {
      for (const auto& v : lex[t]) out << v << '\t' << tax.entity_type_name(static_cast<int>(t)) << '\n';
    }
  }
  {
    std::ofstream out(dir / "taxonomy.json", std::ios::binary);
    out << tax.to_json().dump(2) << '\n';
  }
  {
    std::ofstream out(dir / "rules.json", std::ios::binary);
    out << rules_to_json(corpus.rules, tax).dump(2) << '\n';
  }
}

}  // namespace snlu
